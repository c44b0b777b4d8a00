#ifndef EQUICORR_COMPOSE_HPP
#define EQUICORR_COMPOSE_HPP

#include <utility>

#include "equicorr/seq.hpp"

namespace equicorr {

/// a(z^m) * b(z). For binary a, b with m = length(b) this interleaves copies
/// of b under the entries of a: the composite is binary of length
/// length(a) * length(b).
IntLaurentSeq compose(const IntLaurentSeq& a, const IntLaurentSeq& b, long m);

enum class CompositionCheck {
    /// a was not equicorrelational to c, or b not to d.
    preconditions_unmet,
    confirmed,
    violated,
};

/// Checks that a(z^m)b(z^n) is equicorrelational to c(z^m)d(z^n) whenever
/// a ~ c and b ~ d. The violated verdict exists for the property-test driver
/// and is never expected.
CompositionCheck composition_preserves_equicorr(const IntLaurentSeq& a,
                                                const IntLaurentSeq& b,
                                                const IntLaurentSeq& c,
                                                const IntLaurentSeq& d, long m,
                                                long n);

/// Exact triviality of the composite pair a(z^m)b(z) vs c(z^m)d(z) for
/// equicorrelational binary pairs (a, c) and (b, d) with m = length(b):
/// trivial iff ([a]=[c] and [b]=[d]) or ([a]=[conj c] and [b]=[conj d]).
/// In particular a nontrivial input pair forces a nontrivial composite pair.
bool composition_is_trivial(const IntLaurentSeq& a, const IntLaurentSeq& b,
                            const IntLaurentSeq& c, const IntLaurentSeq& d,
                            long m);

/// General criterion without the binary/length restrictions, for any nonzero
/// m, n: decides trivial equicorrelationality of a(z^m)b(z^n) vs c(z^m)d(z^n)
/// through gcd cofactors instead of expanding the composites.
bool composition_trivial_via_gcd(const IntLaurentSeq& a, const IntLaurentSeq& b,
                                 const IntLaurentSeq& c, const IntLaurentSeq& d,
                                 long m, long n);

/// Concatenates n/m copies of each member of a nontrivially equicorrelational
/// binary pair of length m, giving a nontrivially equicorrelational binary
/// pair of length n.
std::pair<IntLaurentSeq, IntLaurentSeq> lift_equivocal_pair(
    const IntLaurentSeq& f, const IntLaurentSeq& g, long n);

}  // namespace equicorr

#endif  // EQUICORR_COMPOSE_HPP
