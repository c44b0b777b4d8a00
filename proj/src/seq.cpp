#include "equicorr/seq.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <utility>

namespace equicorr {

namespace {
const mpz_class kZero = 0;
}

IntLaurentSeq::IntLaurentSeq(long offset, std::vector<mpz_class> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<mpz_class>(coeffs_.begin() + lo, coeffs_.begin() + hi);
        offset_ += static_cast<long>(lo);
    }
}

IntLaurentSeq IntLaurentSeq::monomial(mpz_class c, long exponent) {
    if (c == 0) return {};
    std::vector<mpz_class> cs;
    cs.push_back(std::move(c));
    return IntLaurentSeq(exponent, std::move(cs));
}

IntLaurentSeq IntLaurentSeq::ones(std::size_t n) {
    return IntLaurentSeq(0, std::vector<mpz_class>(n, 1));
}

const mpz_class& IntLaurentSeq::coeff(long exponent) const {
    if (is_zero() || exponent < offset_ || exponent > top_exponent()) return kZero;
    return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

bool seq_less(const IntLaurentSeq& a, const IntLaurentSeq& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c < 0;
    }
    if (x.size() != y.size()) return x.size() < y.size();
    return a.offset() < b.offset();
}

IntLaurentSeq negate(const IntLaurentSeq& f) {
    std::vector<mpz_class> cs(f.coeffs());
    for (auto& c : cs) c = -c;
    return IntLaurentSeq(f.offset(), std::move(cs));
}

IntLaurentSeq shifted(const IntLaurentSeq& f, long j) {
    if (f.is_zero()) return f;
    return IntLaurentSeq(f.offset() + j, f.coeffs());
}

IntLaurentSeq scaled(const IntLaurentSeq& f, const mpz_class& c) {
    if (c == 0) return {};
    std::vector<mpz_class> cs(f.coeffs());
    for (auto& x : cs) x *= c;
    return IntLaurentSeq(f.offset(), std::move(cs));
}

IntLaurentSeq conjugate(const IntLaurentSeq& f) {
    if (f.is_zero()) return f;
    std::vector<mpz_class> cs(f.coeffs().rbegin(), f.coeffs().rend());
    return IntLaurentSeq(-f.top_exponent(), std::move(cs));
}

IntLaurentSeq multiply(const IntLaurentSeq& f, const IntLaurentSeq& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<mpz_class> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return IntLaurentSeq(f.offset() + g.offset(), std::move(out));
}

IntLaurentSeq add(const IntLaurentSeq& f, const IntLaurentSeq& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const long lo = std::min(f.offset(), g.offset());
    const long hi = std::max(f.top_exponent(), g.top_exponent());
    std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e)
        out[static_cast<std::size_t>(e - lo)] = f.coeff(e) + g.coeff(e);
    return IntLaurentSeq(lo, std::move(out));
}

IntLaurentSeq substitute(const IntLaurentSeq& f, long m) {
    if (m == 0) throw std::invalid_argument("substitute: exponent multiplier must be nonzero");
    if (f.is_zero() || m == 1) return f;
    const auto& cs = f.coeffs();
    const long n = static_cast<long>(cs.size());
    const long new_off = (m > 0) ? f.offset() * m : f.top_exponent() * m;
    std::vector<mpz_class> out(static_cast<std::size_t>((n - 1) * std::labs(m) + 1));
    for (long i = 0; i < n; ++i)
        out[static_cast<std::size_t>((f.offset() + i) * m - new_off)] = cs[static_cast<std::size_t>(i)];
    return IntLaurentSeq(new_off, std::move(out));
}

mpz_class content(const IntLaurentSeq& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntLaurentSeq canonical_associate(const IntLaurentSeq& f) {
    if (f.is_zero()) return f;
    mpz_class c = content(f);
    if (sgn(f.coeffs().front()) < 0) c = -c;
    std::vector<mpz_class> cs(f.coeffs());
    for (auto& x : cs) x /= c;
    return IntLaurentSeq(0, std::move(cs));
}

IntLaurentSeq canonical_trivial(const IntLaurentSeq& f) {
    IntLaurentSeq a = canonical_associate(f);
    IntLaurentSeq b = canonical_associate(conjugate(f));
    return seq_less(b, a) ? b : a;
}

PalindromeKind palindrome_kind(const IntLaurentSeq& f) {
    const auto& cs = f.coeffs();
    const std::size_t n = cs.size();
    bool pal = true;
    bool anti = true;
    for (std::size_t i = 0; i < n && (pal || anti); ++i) {
        const mpz_class& mirror = cs[n - 1 - i];
        if (cs[i] != mirror) pal = false;
        if (cs[i] != -mirror) anti = false;
    }
    if (pal) return PalindromeKind::palindrome;
    if (anti) return PalindromeKind::antipalindrome;
    return PalindromeKind::none;
}

bool is_generalized_palindrome(const IntLaurentSeq& f) {
    return palindrome_kind(f) != PalindromeKind::none;
}

SeqKind classify_kind(const IntLaurentSeq& f) {
    if (f.is_zero()) return SeqKind::zero;
    bool binary = true;
    bool contiguous = true;
    for (const auto& c : f.coeffs()) {
        if (c == 0) {
            contiguous = false;
            binary = false;
        } else if (c != 1 && c != -1) {
            binary = false;
        }
    }
    if (binary) return SeqKind::binary;
    if (contiguous) return SeqKind::contiguous_integer;
    return SeqKind::general_integer;
}

bool is_binary(const IntLaurentSeq& f) {
    return classify_kind(f) == SeqKind::binary;
}

AutocorrFunction autocorrelation(const IntLaurentSeq& f) {
    AutocorrFunction a(multiply(f, conjugate(f)));
    assert(a.function() == conjugate(a.function()));
    return a;
}

bool equicorrelational(const IntLaurentSeq& f, const IntLaurentSeq& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const IntLaurentSeq af = autocorrelation(f).function();
    const IntLaurentSeq ag = autocorrelation(g).function();
    // f*conj(f) = c g*conj(g) forces c = C_f(0)/C_g(0); cross-multiply to stay exact.
    return scaled(af, ag.coeff(0)) == scaled(ag, af.coeff(0));
}

bool trivially_equicorrelational(const IntLaurentSeq& f, const IntLaurentSeq& g) {
    return canonical_trivial(f) == canonical_trivial(g);
}

bool divides(const IntLaurentSeq& g, const IntLaurentSeq& f) {
    if (g.is_zero()) throw std::invalid_argument("divides: zero divisor");
    if (f.is_zero()) return true;
    if (f.length() < g.length()) return false;
    // Primitive divisor of a primitive dividend: exact division over the
    // integers succeeds iff division over the rationals does (Gauss).
    const IntLaurentSeq a = canonical_associate(f);
    const IntLaurentSeq b = canonical_associate(g);
    std::vector<mpz_class> rem(a.coeffs());
    const auto& d = b.coeffs();
    const std::size_t qn = rem.size() - d.size() + 1;
    const mpz_class& lead = d.back();
    for (std::size_t k = qn; k-- > 0;) {
        mpz_class& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        mpz_class q = top / lead;
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
    }
    for (const auto& r : rem)
        if (r != 0) return false;
    return true;
}

IntLaurentSeq divide_exact(const IntLaurentSeq& f, const IntLaurentSeq& g) {
    if (g.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (f.is_zero()) return {};
    const IntLaurentSeq a = canonical_associate(f);
    const IntLaurentSeq b = canonical_associate(g);
    if (a.length() < b.length())
        throw std::invalid_argument("divide_exact: not divisible");
    std::vector<mpz_class> rem(a.coeffs());
    const auto& d = b.coeffs();
    const std::size_t qn = rem.size() - d.size() + 1;
    std::vector<mpz_class> quot(qn);
    const mpz_class& lead = d.back();
    for (std::size_t k = qn; k-- > 0;) {
        mpz_class& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::invalid_argument("divide_exact: not divisible");
        quot[k] = top / lead;
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= quot[k] * d[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::invalid_argument("divide_exact: not divisible");
    return canonical_associate(IntLaurentSeq(0, std::move(quot)));
}

}  // namespace equicorr
