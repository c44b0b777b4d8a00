#ifndef EQUICORR_FACTOR_HPP
#define EQUICORR_FACTOR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "equicorr/seq.hpp"

namespace equicorr {

struct SquarefreePart {
    IntLaurentSeq part;
    int multiplicity = 1;

    friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// Pairwise coprime squarefree parts of p, ordered by ascending multiplicity,
/// whose weighted product reproduces p exactly.  Requires p nonzero, content
/// 1, nonzero constant term (powers of z must be stripped first).  Parts have
/// positive leading coefficients, except that for negative-leading p one
/// odd-multiplicity part carries the sign.
std::vector<SquarefreePart> squarefree_decompose(const IntLaurentSeq& p);

/// Polynomial over F_q; entry i is the coefficient of z^i, in [0, q).
using ModPoly = std::vector<std::uint64_t>;

/// Monic irreducible factorization of p modulo the odd prime q, sorted by
/// degree then coefficient order.  Empty when q is unusable for p: the
/// leading coefficient vanishes mod q, or p is not squarefree mod q.
std::optional<std::vector<ModPoly>> factor_mod_p(const IntLaurentSeq& p,
                                                 std::uint64_t q);

struct IrreducibleFactor {
    IntLaurentSeq poly;  // primitive irreducible, positive constant coefficient
    int multiplicity = 1;

    friend bool operator==(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

/// sign * content * z^shift * prod(poly^multiplicity) == the factored input,
/// bit-exactly.  Factors are pairwise non-associate, sorted under seq_less.
struct IrreducibleFactorization {
    int sign = 1;
    long shift = 0;
    mpz_class content = 1;
    std::vector<IrreducibleFactor> factors;

    IntLaurentSeq reconstruct() const;
};

/// Complete factorization of a nonzero sequence into irreducibles over the
/// rationals, realized as primitive integer polynomials.
IrreducibleFactorization factor(const IntLaurentSeq& f);

}  // namespace equicorr

#endif
