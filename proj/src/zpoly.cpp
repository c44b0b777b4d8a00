#include "zpoly.hpp"

#include <algorithm>

namespace equicorr::detail {

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly from_seq(const IntLaurentSeq& f) { return f.coeffs(); }

IntLaurentSeq to_seq(const ZPoly& p, long offset) {
    return IntLaurentSeq(offset, p);
}

ZPoly neg(const ZPoly& a) {
    ZPoly r(a);
    for (auto& c : r) c = -c;
    return r;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

ZPoly mul_scalar(const ZPoly& a, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

ZPoly derivative(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

ZPoly reversal(const ZPoly& a) {
    ZPoly r(a.rbegin(), a.rend());
    trim(r);
    return r;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& a) {
    if (is_zero(a)) return {};
    mpz_class c = content(a);
    ZPoly r(a);
    for (auto& x : r) x /= c;
    return r;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (is_zero(b)) return std::nullopt;
    if (is_zero(a)) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    ZPoly rem(a);
    ZPoly quot(a.size() - b.size() + 1);
    const mpz_class& lead = b.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class& top = rem[k + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        quot[k] = top / lead;
        for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] -= quot[k] * b[i];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    trim(quot);
    return quot;
}

namespace {

// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b; requires
// deg a >= deg b >= 0.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const mpz_class& lead = b.back();
    int e = deg(a) - deg(b) + 1;
    while (!is_zero(a) && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        mpz_class top = a.back();
        for (auto& c : a) c *= lead;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        trim(a);
        --e;
    }
    if (e > 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= scale;
    }
    return a;
}

}  // namespace

ZPoly gcd(ZPoly a, ZPoly b) {
    if (is_zero(a)) std::swap(a, b);
    if (is_zero(b)) {
        if (is_zero(a)) return {};
        ZPoly r = primitive_part(a);
        if (sgn(r.back()) < 0)
            for (auto& c : r) c = -c;
        return r;
    }
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!is_zero(b)) {
        ZPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    if (sgn(a.back()) < 0)
        for (auto& c : a) c = -c;
    return a;
}

mpz_class norm2_squared(const ZPoly& a) {
    mpz_class s = 0;
    for (const auto& c : a) s += c * c;
    return s;
}

}  // namespace equicorr::detail
