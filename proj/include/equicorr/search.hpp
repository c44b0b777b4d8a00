#ifndef EQUICORR_SEARCH_HPP
#define EQUICORR_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "equicorr/seq.hpp"

namespace equicorr {

/// Thrown when a search length exceeds the configured ceiling (or the hard
/// packing cap of 34) and no override was requested.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a checkpoint shard file exists but cannot be trusted: bad
/// magic, wrong version, truncated payload, or a header that contradicts the
/// file's name.
class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a run stops early because the abort-after-shards test hook
/// fired. Any shards completed before the abort are already on disk.
class SearchAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Binary sequences of length n <= 64 live in machine words: coefficient j
/// sits at bit (n-1-j), with +1 encoded as 1 and -1 as 0. Numeric order on
/// words then agrees with seq_less on the sequences they encode.
uint64_t seq_to_word(const IntLaurentSeq& f);
IntLaurentSeq word_to_seq(uint64_t w, int n);

/// The other candidate representative of w's trivial class among words with
/// the leading coefficient +1: reverse the n bits, negate if that cleared the
/// top bit.
uint64_t partner_word(uint64_t w, int n);

/// True for the words enumerate_canonical emits: top bit set and w <= partner.
bool is_canonical_word(uint64_t w, int n);

/// Aperiodic autocorrelation C(s) of the length-n binary sequence packed in w.
long binary_autocorrelation(uint64_t w, int n, int s);

/// The full list of C(s) for s = 1 .. n-1 packed into one 128-bit integer.
/// Digit s is the agreement count (C(s) + n - s) / 2 in radix n - s + 1, so
/// two words of equal length get equal keys exactly when their
/// autocorrelation functions agree. The radix product is n!, which fits in
/// 128 bits only for n <= 34; that bound is the search engine's hard cap.
struct AutocorrKey {
    unsigned __int128 packed = 0;

    static AutocorrKey from_word(uint64_t w, int n);
    std::vector<long> values(int n) const;

    friend bool operator==(const AutocorrKey&, const AutocorrKey&) = default;
    friend bool operator<(const AutocorrKey& a, const AutocorrKey& b) {
        return a.packed < b.packed;
    }
};

/// Number of words enumerate_canonical(n) emits: one representative per
/// trivial binary equicorrelationality class.
uint64_t canonical_count(int n);

/// Streams the canonical words of length n in increasing order.
void enumerate_canonical(int n, const std::function<void(uint64_t)>& fn);

struct VolumeDistribution {
    int length = 0;
    /// (volume, count) pairs sorted by volume; volumes >= 2 only.
    std::vector<std::pair<long, long>> entries;
    bool equivocal = false;

    friend bool operator==(const VolumeDistribution&, const VolumeDistribution&) = default;
};

struct NontrivialClass {
    /// C(s) for s = 1 .. n-1, shared by every member.
    std::vector<long> correlations;
    /// Members in canonical form, sorted; at least two.
    std::vector<IntLaurentSeq> members;
};

struct SearchOptions {
    int threads = 1;
    /// Lengths above the ceiling are refused unless force is set. The packing
    /// cap of 34 cannot be overridden.
    int ceiling = 30;
    bool force = false;
    /// Retain class members, not just bucket sizes.
    bool keep_members = false;
    /// When nonempty, completed shards are persisted here and existing valid
    /// shard files are reused instead of recomputed.
    std::string checkpoint_dir;
    /// Test hook: stop the run once this many shards have been computed in
    /// this process (checkpoint loads do not count). 0 disables.
    int abort_after_shards = 0;
};

struct SearchResult {
    VolumeDistribution distribution;
    /// Populated only when keep_members was requested; sorted by key.
    std::vector<NontrivialClass> classes;
};

/// Exhaustive search over the canonical binary sequences of length n, sharded
/// by 8-bit prefixes (fewer for short n). Deterministic: the result is
/// independent of thread count and of which shards came from checkpoints.
SearchResult search_binary(int n, const SearchOptions& opts = {});

VolumeDistribution volume_distribution(int n, const SearchOptions& opts = {});
std::vector<NontrivialClass> find_nontrivial_classes(int n, SearchOptions opts = {});
bool is_unequivocal(int n, const SearchOptions& opts = {});

}  // namespace equicorr

#endif  // EQUICORR_SEARCH_HPP
