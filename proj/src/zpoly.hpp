#ifndef EQUICORR_SRC_ZPOLY_HPP
#define EQUICORR_SRC_ZPOLY_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "equicorr/seq.hpp"

// Dense integer polynomials (coeff i of z^i, trimmed so back() != 0; the zero
// polynomial is the empty vector).  Internal substrate for gcd and factoring.

namespace equicorr::detail {

using ZPoly = std::vector<mpz_class>;

inline int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const ZPoly& p) { return p.empty(); }

void trim(ZPoly& p);
ZPoly from_seq(const IntLaurentSeq& f);
IntLaurentSeq to_seq(const ZPoly& p, long offset = 0);

ZPoly neg(const ZPoly& a);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly mul_scalar(const ZPoly& a, const mpz_class& c);
ZPoly derivative(const ZPoly& a);
ZPoly reversal(const ZPoly& a);

mpz_class content(const ZPoly& a);

/// Divides out the content; the sign of the leading coefficient is kept.
ZPoly primitive_part(const ZPoly& a);

/// Exact quotient when b | a over the integers; nullopt otherwise.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

/// Primitive gcd over the integers via the primitive pseudo-remainder
/// sequence; the result has a positive leading coefficient (zero for
/// gcd(0,0)).
ZPoly gcd(ZPoly a, ZPoly b);

/// Squared Euclidean norm of the coefficient vector.
mpz_class norm2_squared(const ZPoly& a);

}  // namespace equicorr::detail

#endif
