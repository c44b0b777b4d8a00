#include "equicorr/compose.hpp"

#include <stdexcept>

#include "equicorr/classes.hpp"

namespace equicorr {

namespace {

bool associates(const IntLaurentSeq& f, const IntLaurentSeq& g) {
    return canonical_associate(f) == canonical_associate(g);
}

/// Cofactor of f against the gcd divisor d, as an associate-class
/// representative.
IntLaurentSeq cofactor(const IntLaurentSeq& f, const IntLaurentSeq& d) {
    return divide_exact(f, d);
}

}  // namespace

IntLaurentSeq compose(const IntLaurentSeq& a, const IntLaurentSeq& b, long m) {
    if (m < 1) throw std::invalid_argument("compose: the stride must be positive");
    return multiply(substitute(a, m), b);
}

CompositionCheck composition_preserves_equicorr(const IntLaurentSeq& a,
                                                const IntLaurentSeq& b,
                                                const IntLaurentSeq& c,
                                                const IntLaurentSeq& d, long m,
                                                long n) {
    if (m == 0 || n == 0)
        throw std::invalid_argument("composition exponents must be nonzero");
    if (!equicorrelational(a, c) || !equicorrelational(b, d))
        return CompositionCheck::preconditions_unmet;
    const IntLaurentSeq f = multiply(substitute(a, m), substitute(b, n));
    const IntLaurentSeq g = multiply(substitute(c, m), substitute(d, n));
    return equicorrelational(f, g) ? CompositionCheck::confirmed
                                   : CompositionCheck::violated;
}

bool composition_is_trivial(const IntLaurentSeq& a, const IntLaurentSeq& b,
                            const IntLaurentSeq& c, const IntLaurentSeq& d,
                            long m) {
    if (!is_binary(a) || !is_binary(b) || !is_binary(c) || !is_binary(d))
        throw std::invalid_argument("composition triviality needs binary sequences");
    if (a.length() != c.length() || b.length() != d.length())
        throw std::invalid_argument("composition triviality needs matching lengths");
    if (m != static_cast<long>(b.length()))
        throw std::invalid_argument("the stride must equal the inner length");
    if (!equicorrelational(a, c) || !equicorrelational(b, d))
        throw std::invalid_argument("composition triviality needs equicorrelational pairs");

    return (associates(a, c) && associates(b, d)) ||
           (associates(a, conjugate(c)) && associates(b, conjugate(d)));
}

bool composition_trivial_via_gcd(const IntLaurentSeq& a, const IntLaurentSeq& b,
                                 const IntLaurentSeq& c, const IntLaurentSeq& d,
                                 long m, long n) {
    if (m == 0 || n == 0)
        throw std::invalid_argument("composition exponents must be nonzero");
    const bool fg_zero = a.is_zero() || b.is_zero();
    const bool gh_zero = c.is_zero() || d.is_zero();
    if (fg_zero || gh_zero) return fg_zero && gh_zero;

    // associate branch
    {
        const IntLaurentSeq s = gcd_seq(a, c);
        const IntLaurentSeq t = gcd_seq(b, d);
        const IntLaurentSeq alpha = cofactor(a, s);
        const IntLaurentSeq gamma = cofactor(c, s);
        const IntLaurentSeq beta = cofactor(b, t);
        const IntLaurentSeq delta = cofactor(d, t);
        if (associates(substitute(alpha, m), substitute(delta, n)) &&
            associates(substitute(beta, n), substitute(gamma, m)))
            return true;
    }

    // conjugate branch: compare against the conjugate composite
    const IntLaurentSeq cc = conjugate(c);
    const IntLaurentSeq dc = conjugate(d);
    const IntLaurentSeq s = gcd_seq(a, cc);
    const IntLaurentSeq t = gcd_seq(b, dc);
    const IntLaurentSeq alpha = cofactor(a, s);
    const IntLaurentSeq gamma = cofactor(cc, s);
    const IntLaurentSeq beta = cofactor(b, t);
    const IntLaurentSeq delta = cofactor(dc, t);
    return associates(substitute(alpha, m), substitute(delta, n)) &&
           associates(substitute(beta, n), substitute(gamma, m));
}

std::pair<IntLaurentSeq, IntLaurentSeq> lift_equivocal_pair(
    const IntLaurentSeq& f, const IntLaurentSeq& g, long n) {
    if (!is_binary(f) || !is_binary(g) || f.length() != g.length())
        throw std::invalid_argument("lifting needs binary sequences of one length");
    const long m = static_cast<long>(f.length());
    if (n < m || n % m != 0)
        throw std::invalid_argument("the target length must be a multiple of the source length");
    if (!equicorrelational(f, g) || trivially_equicorrelational(f, g))
        throw std::invalid_argument("lifting needs a nontrivially equicorrelational pair");

    const IntLaurentSeq copies = IntLaurentSeq::ones(static_cast<std::size_t>(n / m));
    return {compose(copies, f, m), compose(copies, g, m)};
}

}  // namespace equicorr
