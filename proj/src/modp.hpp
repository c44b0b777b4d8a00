#ifndef EQUICORR_SRC_MODP_HPP
#define EQUICORR_SRC_MODP_HPP

// Dense polynomial arithmetic over F_q for word-sized odd primes q, plus the
// distinct-degree / equal-degree machinery used to factor a squarefree image
// of an integer polynomial. All randomness is drawn from a generator owned by
// the caller so repeated runs are reproducible.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace equicorr::detail {

// Coefficient vector in [0, q), index i holding the coefficient of z^i,
// trailing zeros trimmed; empty vector is the zero polynomial.
using PPoly = std::vector<std::uint64_t>;

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q);
std::uint64_t invmod(std::uint64_t a, std::uint64_t q);

inline int pdeg(const PPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool pis_zero(const PPoly& p) { return p.empty(); }
void ptrim(PPoly& p);

PPoly padd(const PPoly& a, const PPoly& b, std::uint64_t q);
PPoly psub(const PPoly& a, const PPoly& b, std::uint64_t q);
PPoly pmul(const PPoly& a, const PPoly& b, std::uint64_t q);
PPoly pmul_scalar(const PPoly& a, std::uint64_t c, std::uint64_t q);

// Euclidean division; quotient returned, remainder left in a.
PPoly pdivmod(PPoly& a, const PPoly& b, std::uint64_t q);
PPoly pmod(PPoly a, const PPoly& b, std::uint64_t q);
PPoly pmake_monic(PPoly a, std::uint64_t q);
PPoly pgcd(PPoly a, PPoly b, std::uint64_t q);
PPoly pderivative(const PPoly& a, std::uint64_t q);

// a^e mod m with an arbitrary-precision exponent.
PPoly ppowmod(const PPoly& a, const mpz_class& e, const PPoly& m, std::uint64_t q);

// Reduce an integer polynomial mod q (coefficients into [0, q)).
PPoly reduce_mod(const std::vector<mpz_class>& a, std::uint64_t q);

// Monic irreducible factors of a monic squarefree polynomial mod q, sorted by
// (degree, coefficients) so the output order is independent of the random
// splitting choices.
std::vector<PPoly> factor_monic_squarefree_mod(const PPoly& f, std::uint64_t q,
                                               std::mt19937_64& rng);

}  // namespace equicorr::detail

#endif
