#include "modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace equicorr::detail {

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    std::uint64_t s = a + b;
    if (s >= q) s -= q;
    return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return a >= b ? a - b : a + q - b;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
    std::uint64_t r = 1 % q;
    a %= q;
    while (e) {
        if (e & 1) r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t q) {
    return powmod(a % q, q - 2, q);
}

void ptrim(PPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

PPoly padd(const PPoly& a, const PPoly& b, std::uint64_t q) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = addmod(r[i], b[i], q);
    ptrim(r);
    return r;
}

PPoly psub(const PPoly& a, const PPoly& b, std::uint64_t q) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = submod(r[i], b[i], q);
    ptrim(r);
    return r;
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint64_t q) {
    if (pis_zero(a) || pis_zero(b)) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], q), q);
    }
    return r;
}

PPoly pmul_scalar(const PPoly& a, std::uint64_t c, std::uint64_t q) {
    c %= q;
    if (c == 0) return {};
    PPoly r(a);
    for (auto& x : r) x = mulmod(x, c, q);
    return r;
}

PPoly pdivmod(PPoly& a, const PPoly& b, std::uint64_t q) {
    if (pis_zero(b)) throw std::invalid_argument("division by zero polynomial");
    if (a.size() < b.size()) return {};
    PPoly quot(a.size() - b.size() + 1, 0);
    const std::uint64_t inv_lead = invmod(b.back(), q);
    for (std::size_t k = quot.size(); k-- > 0;) {
        std::uint64_t top = a[k + b.size() - 1];
        if (top == 0) continue;
        std::uint64_t c = mulmod(top, inv_lead, q);
        quot[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[k + i] = submod(a[k + i], mulmod(c, b[i], q), q);
    }
    ptrim(a);
    ptrim(quot);
    return quot;
}

PPoly pmod(PPoly a, const PPoly& b, std::uint64_t q) {
    pdivmod(a, b, q);
    return a;
}

PPoly pmake_monic(PPoly a, std::uint64_t q) {
    if (pis_zero(a)) return a;
    std::uint64_t inv = invmod(a.back(), q);
    for (auto& c : a) c = mulmod(c, inv, q);
    return a;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t q) {
    while (!pis_zero(b)) {
        a = pmod(std::move(a), b, q);
        std::swap(a, b);
    }
    return pmake_monic(std::move(a), q);
}

PPoly pderivative(const PPoly& a, std::uint64_t q) {
    if (a.size() <= 1) return {};
    PPoly r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % q, q);
    ptrim(r);
    return r;
}

PPoly ppowmod(const PPoly& a, const mpz_class& e, const PPoly& m, std::uint64_t q) {
    PPoly base = pmod(a, m, q);
    PPoly result{1};
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = pmod(pmul(result, result, q), m, q);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = pmod(pmul(result, base, q), m, q);
    }
    return result;
}

PPoly reduce_mod(const std::vector<mpz_class>& a, std::uint64_t q) {
    PPoly r(a.size(), 0);
    mpz_class tmp;
    for (std::size_t i = 0; i < a.size(); ++i) {
        tmp = a[i] % static_cast<unsigned long>(q);
        if (tmp < 0) tmp += static_cast<unsigned long>(q);
        r[i] = tmp.get_ui();
    }
    ptrim(r);
    return r;
}

namespace {

// Distinct-degree decomposition: pairs (d, product of irreducibles of
// degree d) for monic squarefree f.
std::vector<std::pair<int, PPoly>> distinct_degree(const PPoly& f, std::uint64_t q) {
    std::vector<std::pair<int, PPoly>> parts;
    PPoly rest = f;
    PPoly h{0, 1};  // z
    int d = 0;
    while (pdeg(rest) > 0) {
        ++d;
        if (2 * d > pdeg(rest)) {
            parts.emplace_back(pdeg(rest), rest);
            break;
        }
        h = ppowmod(h, mpz_class(static_cast<unsigned long>(q)), rest, q);
        PPoly diff = psub(h, PPoly{0, 1}, q);
        PPoly g = pgcd(rest, diff, q);
        if (pdeg(g) > 0) {
            parts.emplace_back(d, g);
            PPoly quot = pdivmod(rest, g, q);
            rest = std::move(quot);
            h = pmod(std::move(h), rest, q);
        }
    }
    return parts;
}

// Cantor-Zassenhaus split of a product of irreducibles all of degree d.
void equal_degree(const PPoly& f, int d, std::uint64_t q, std::mt19937_64& rng,
                  std::vector<PPoly>& out) {
    if (pdeg(f) == d) {
        out.push_back(f);
        return;
    }
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(d));
    mpz_class exp = (qd - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
    for (;;) {
        PPoly a(static_cast<std::size_t>(pdeg(f)), 0);
        for (auto& c : a) c = dist(rng);
        ptrim(a);
        if (pdeg(a) < 1) continue;
        PPoly g = pgcd(f, a, q);
        if (pdeg(g) == 0) {
            PPoly b = ppowmod(a, exp, f, q);
            b = psub(b, PPoly{1}, q);
            g = pgcd(f, b, q);
        }
        if (pdeg(g) > 0 && pdeg(g) < pdeg(f)) {
            PPoly rest = f;
            PPoly quot = pdivmod(rest, g, q);
            equal_degree(g, d, q, rng, out);
            equal_degree(quot, d, q, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PPoly> factor_monic_squarefree_mod(const PPoly& f, std::uint64_t q,
                                               std::mt19937_64& rng) {
    std::vector<PPoly> factors;
    if (pdeg(f) <= 0) return factors;
    for (const auto& [d, part] : distinct_degree(f, q)) {
        if (pdeg(part) == d)
            factors.push_back(part);
        else
            equal_degree(part, d, q, rng, factors);
    }
    std::sort(factors.begin(), factors.end(), [](const PPoly& a, const PPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return factors;
}

}  // namespace equicorr::detail
