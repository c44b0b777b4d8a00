#include "equicorr/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace equicorr {

namespace {

// Radix product of the key packing is n!, which overflows 128 bits at 35.
constexpr int kHardLengthCap = 34;
constexpr char kShardMagic[8] = {'E', 'Q', 'C', 'S', 'H', 'A', 'R', 'D'};
constexpr uint32_t kShardVersion = 1;
constexpr std::size_t kShardHeaderSize = 8 + 4 * 4 + 1 + 8;
constexpr std::size_t kShardRecordSize = 16 + 8;

uint64_t mask_bits(int k) { return k >= 64 ? ~0ULL : (1ULL << k) - 1; }

uint64_t bit_reverse64(uint64_t v) {
    v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
    v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
    v = ((v >> 4) & 0x0f0f0f0f0f0f0f0fULL) | ((v & 0x0f0f0f0f0f0f0f0fULL) << 4);
    return __builtin_bswap64(v);
}

int prefix_bits_for(int n) { return std::min(8, std::max(0, n - 2)); }

void check_word_length(int n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("binary word length must be between 1 and 64");
}

unsigned __int128 key_of(uint64_t w, int n) {
    unsigned __int128 key = 0;
    for (int s = 1; s < n; ++s) {
        const int overlap = n - s;
        const int disagreements =
            __builtin_popcountll((w ^ (w >> s)) & mask_bits(overlap));
        key = key * static_cast<unsigned>(overlap + 1) +
              static_cast<unsigned>(overlap - disagreements);
    }
    return key;
}

struct ShardRecord {
    unsigned __int128 key;
    uint64_t payload;  // bucket count in distribution mode, word in member mode
};

bool record_less(const ShardRecord& a, const ShardRecord& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.payload < b.payload;
}

std::vector<ShardRecord> compute_shard(int n, int prefix_bits, uint32_t shard_id,
                                       bool member_mode) {
    const int free_bits = n - 1 - prefix_bits;
    const uint64_t base = (1ULL << (n - 1)) |
                          (static_cast<uint64_t>(shard_id) << free_bits);
    std::vector<ShardRecord> records;
    for (uint64_t low = 0; low < (1ULL << free_bits); ++low) {
        const uint64_t w = base | low;
        if (!is_canonical_word(w, n)) continue;
        records.push_back({key_of(w, n), member_mode ? w : 1});
    }
    std::sort(records.begin(), records.end(), record_less);
    if (!member_mode) {
        // collapse within-shard duplicates to (key, count)
        std::size_t out = 0;
        for (std::size_t i = 0; i < records.size();) {
            std::size_t j = i;
            while (j < records.size() && records[j].key == records[i].key) ++j;
            records[out] = {records[i].key, j - i};
            ++out;
            i = j;
        }
        records.resize(out);
    }
    return records;
}

void append_u32(std::string& buf, uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_u64(std::string& buf, uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_u128(std::string& buf, unsigned __int128 v) {
    for (int i = 0; i < 16; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint64_t read_u64(const unsigned char* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

uint32_t read_u32(const unsigned char* p) {
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

unsigned __int128 read_u128(const unsigned char* p) {
    unsigned __int128 v = 0;
    for (int i = 15; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

std::filesystem::path shard_path(const std::string& dir, int n, int prefix_bits,
                                 uint32_t shard_id) {
    return std::filesystem::path(dir) /
           ("shard-" + std::to_string(n) + "-" + std::to_string(prefix_bits) + "-" +
            std::to_string(shard_id) + ".eqc");
}

void write_shard(const std::filesystem::path& path, int n, int prefix_bits,
                 uint32_t shard_id, bool member_mode,
                 const std::vector<ShardRecord>& records) {
    std::string buf;
    buf.reserve(kShardHeaderSize + kShardRecordSize * records.size());
    buf.append(kShardMagic, sizeof kShardMagic);
    append_u32(buf, kShardVersion);
    append_u32(buf, static_cast<uint32_t>(n));
    append_u32(buf, static_cast<uint32_t>(prefix_bits));
    append_u32(buf, shard_id);
    buf.push_back(member_mode ? 1 : 0);
    append_u64(buf, records.size());
    for (const auto& r : records) {
        append_u128(buf, r.key);
        append_u64(buf, r.payload);
    }

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (!out) throw CheckpointError("failed to write shard file " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("failed to commit shard file " + path.string());
}

/// Returns true and fills records when a usable checkpoint exists. A file
/// written for the other mode is treated as absent so the shard is recomputed
/// and overwritten; a damaged file is an error.
bool load_shard(const std::filesystem::path& path, int n, int prefix_bits,
                uint32_t shard_id, bool member_mode,
                std::vector<ShardRecord>& records) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::vector<unsigned char> buf{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
    if (buf.size() < kShardHeaderSize ||
        std::memcmp(buf.data(), kShardMagic, sizeof kShardMagic) != 0)
        throw CheckpointError("not a shard file: " + path.string());
    const unsigned char* p = buf.data() + sizeof kShardMagic;
    if (read_u32(p) != kShardVersion)
        throw CheckpointError("unsupported shard version in " + path.string());
    if (read_u32(p + 4) != static_cast<uint32_t>(n) ||
        read_u32(p + 8) != static_cast<uint32_t>(prefix_bits) ||
        read_u32(p + 12) != shard_id)
        throw CheckpointError("shard header does not match its name: " + path.string());
    const bool file_member_mode = p[16] != 0;
    const uint64_t count = read_u64(p + 17);
    const std::size_t payload_bytes = buf.size() - kShardHeaderSize;
    if (payload_bytes % kShardRecordSize != 0 ||
        payload_bytes / kShardRecordSize != count)
        throw CheckpointError("truncated shard file: " + path.string());
    if (file_member_mode != member_mode) return false;

    records.clear();
    records.reserve(count);
    const unsigned char* rec = buf.data() + kShardHeaderSize;
    for (uint64_t i = 0; i < count; ++i, rec += kShardRecordSize)
        records.push_back({read_u128(rec), read_u64(rec + 16)});
    return true;
}

}  // namespace

uint64_t seq_to_word(const IntLaurentSeq& f) {
    if (!is_binary(f)) throw std::invalid_argument("seq_to_word needs a binary sequence");
    const std::size_t n = f.length();
    check_word_length(static_cast<int>(n));
    uint64_t w = 0;
    for (std::size_t j = 0; j < n; ++j)
        if (f.coeffs()[j] > 0) w |= 1ULL << (n - 1 - j);
    return w;
}

IntLaurentSeq word_to_seq(uint64_t w, int n) {
    check_word_length(n);
    if (n < 64 && (w >> n) != 0)
        throw std::invalid_argument("word has bits above the sequence length");
    std::vector<mpz_class> coeffs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        coeffs[static_cast<std::size_t>(j)] = (w >> (n - 1 - j)) & 1 ? 1 : -1;
    return IntLaurentSeq(0, std::move(coeffs));
}

uint64_t partner_word(uint64_t w, int n) {
    check_word_length(n);
    uint64_t r = bit_reverse64(w) >> (64 - n);
    if (((r >> (n - 1)) & 1) == 0) r = ~r & mask_bits(n);
    return r;
}

bool is_canonical_word(uint64_t w, int n) {
    if (((w >> (n - 1)) & 1) == 0) return false;
    return w <= partner_word(w, n);
}

long binary_autocorrelation(uint64_t w, int n, int s) {
    check_word_length(n);
    if (s < 0) s = -s;
    if (s >= n) return 0;
    const int overlap = n - s;
    const int disagreements = __builtin_popcountll((w ^ (w >> s)) & mask_bits(overlap));
    return overlap - 2L * disagreements;
}

AutocorrKey AutocorrKey::from_word(uint64_t w, int n) {
    check_word_length(n);
    if (n > kHardLengthCap)
        throw ResourceLimitError("autocorrelation keys pack lengths up to 34 only");
    return AutocorrKey{key_of(w, n)};
}

std::vector<long> AutocorrKey::values(int n) const {
    std::vector<long> out(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    unsigned __int128 rest = packed;
    for (int s = n - 1; s >= 1; --s) {
        const unsigned radix = static_cast<unsigned>(n - s + 1);
        const long agreements = static_cast<long>(rest % radix);
        rest /= radix;
        out[static_cast<std::size_t>(s - 1)] = 2 * agreements - (n - s);
    }
    return out;
}

uint64_t canonical_count(int n) {
    check_word_length(n);
    if (n == 1) return 1;
    return (1ULL << (n - 2)) + (1ULL << (n / 2 - 1));
}

void enumerate_canonical(int n, const std::function<void(uint64_t)>& fn) {
    check_word_length(n);
    if (n > 63) throw std::invalid_argument("enumeration supports lengths up to 63");
    const uint64_t top = 1ULL << (n - 1);
    for (uint64_t w = top; w < top << 1; ++w)
        if (is_canonical_word(w, n)) fn(w);
}

SearchResult search_binary(int n, const SearchOptions& opts) {
    if (n < 1) throw std::invalid_argument("sequence length must be positive");
    if (opts.threads < 1) throw std::invalid_argument("thread count must be positive");
    if (opts.abort_after_shards < 0)
        throw std::invalid_argument("abort_after_shards must be nonnegative");
    if (n > kHardLengthCap)
        throw ResourceLimitError("length " + std::to_string(n) +
                                 " exceeds the key packing cap of 34");
    if (n > opts.ceiling && !opts.force)
        throw ResourceLimitError("length " + std::to_string(n) +
                                 " exceeds the ceiling of " +
                                 std::to_string(opts.ceiling) +
                                 "; pass force to override");

    const int prefix_bits = prefix_bits_for(n);
    const uint32_t shard_count = 1U << prefix_bits;
    const bool member_mode = opts.keep_members;
    const bool use_checkpoints = !opts.checkpoint_dir.empty();
    if (use_checkpoints)
        std::filesystem::create_directories(opts.checkpoint_dir);

    std::vector<std::vector<ShardRecord>> shards(shard_count);
    std::atomic<uint32_t> next{0};
    std::atomic<uint32_t> computed{0};
    std::atomic<bool> stop{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto record_error = [&](std::exception_ptr e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = e;
        stop.store(true);
    };

    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            const uint32_t s = next.fetch_add(1);
            if (s >= shard_count) return;
            try {
                bool loaded = false;
                if (use_checkpoints) {
                    loaded = load_shard(
                        shard_path(opts.checkpoint_dir, n, prefix_bits, s), n,
                        prefix_bits, s, member_mode, shards[s]);
                }
                if (!loaded) {
                    shards[s] = compute_shard(n, prefix_bits, s, member_mode);
                    if (use_checkpoints)
                        write_shard(shard_path(opts.checkpoint_dir, n, prefix_bits, s),
                                    n, prefix_bits, s, member_mode, shards[s]);
                    const uint32_t done = computed.fetch_add(1) + 1;
                    if (opts.abort_after_shards > 0 &&
                        done >= static_cast<uint32_t>(opts.abort_after_shards))
                        throw SearchAborted("aborted after " + std::to_string(done) +
                                            " computed shards");
                }
            } catch (...) {
                record_error(std::current_exception());
                return;
            }
        }
    };

    const unsigned worker_count =
        std::min<unsigned>(static_cast<unsigned>(opts.threads), shard_count);
    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<ShardRecord> merged;
    std::size_t total = 0;
    for (const auto& s : shards) total += s.size();
    merged.reserve(total);
    for (const auto& s : shards) merged.insert(merged.end(), s.begin(), s.end());
    std::sort(merged.begin(), merged.end(), record_less);

    SearchResult result;
    result.distribution.length = n;
    std::map<long, long> volumes;
    for (std::size_t i = 0; i < merged.size();) {
        std::size_t j = i;
        uint64_t bucket = 0;
        while (j < merged.size() && merged[j].key == merged[i].key) {
            bucket += member_mode ? 1 : merged[j].payload;
            ++j;
        }
        if (bucket >= 2) {
            ++volumes[static_cast<long>(bucket)];
            if (member_mode) {
                NontrivialClass cls;
                cls.correlations = AutocorrKey{merged[i].key}.values(n);
                for (std::size_t k = i; k < j; ++k)
                    cls.members.push_back(word_to_seq(merged[k].payload, n));
                result.classes.push_back(std::move(cls));
            }
        }
        i = j;
    }
    result.distribution.entries.assign(volumes.begin(), volumes.end());
    result.distribution.equivocal = !result.distribution.entries.empty();
    return result;
}

VolumeDistribution volume_distribution(int n, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.keep_members = false;
    return search_binary(n, o).distribution;
}

std::vector<NontrivialClass> find_nontrivial_classes(int n, SearchOptions opts) {
    opts.keep_members = true;
    return std::move(search_binary(n, opts).classes);
}

bool is_unequivocal(int n, const SearchOptions& opts) {
    return !volume_distribution(n, opts).equivocal;
}

}  // namespace equicorr
