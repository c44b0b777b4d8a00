#include "equicorr/factor.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "modp.hpp"
#include "zpoly.hpp"

namespace equicorr {
namespace {

using detail::PPoly;
using detail::ZPoly;

constexpr std::uint64_t kSplitSeed = 0x9e3779b97f4a7c15ULL;
constexpr int kPrimeCandidates = 5;

bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_odd_prime(std::uint64_t q) {
    do q += 2;
    while (!is_small_prime(q));
    return q;
}

// Squarefree chain via gcd-with-derivative on a primitive polynomial with
// positive leading coefficient; parts come out primitive, positive-leading,
// in ascending multiplicity order.
std::vector<std::pair<ZPoly, int>> yun_parts(const ZPoly& p) {
    std::vector<std::pair<ZPoly, int>> parts;
    ZPoly dp = detail::derivative(p);
    ZPoly g = detail::gcd(p, dp);
    ZPoly w = *detail::divide_exact(p, g);
    ZPoly y = *detail::divide_exact(dp, g);
    int i = 1;
    while (detail::deg(w) > 0) {
        ZPoly d = detail::sub(y, detail::derivative(w));
        ZPoly a = detail::gcd(w, d);
        if (detail::deg(a) > 0) parts.emplace_back(a, i);
        w = *detail::divide_exact(w, a);
        y = *detail::divide_exact(d, a);
        ++i;
    }
    return parts;
}

bool mod_squarefree_image(const ZPoly& p, std::uint64_t q, PPoly& monic_out) {
    PPoly red = detail::reduce_mod(p, q);
    if (detail::pdeg(red) != detail::deg(p)) return false;
    PPoly monic = detail::pmake_monic(std::move(red), q);
    if (detail::pdeg(monic) >= 1) {
        PPoly der = detail::pderivative(monic, q);
        if (detail::pis_zero(der)) return false;
        if (detail::pdeg(detail::pgcd(monic, der, q)) != 0) return false;
    }
    monic_out = std::move(monic);
    return true;
}

// ---- arithmetic mod a word-prime power, coefficients in [0, m) ----

using QPoly = std::vector<mpz_class>;

void qtrim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly to_qpoly(const PPoly& a) {
    QPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

PPoly to_ppoly(const QPoly& a) {
    PPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].get_ui();
    return r;
}

QPoly qadd(const QPoly& a, const QPoly& b, const mpz_class& m) {
    QPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
        if (r[i] >= m) r[i] -= m;
    }
    qtrim(r);
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b, const mpz_class& m) {
    QPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0) r[i] += m;
    }
    qtrim(r);
    return r;
}

QPoly qmul(const QPoly& a, const QPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c %= m;
    qtrim(r);
    return r;
}

// Division by h with leading coefficient literally 1.
std::pair<QPoly, QPoly> qdivmod_monic(QPoly a, const QPoly& h, const mpz_class& m) {
    if (a.size() < h.size()) return {QPoly{}, std::move(a)};
    QPoly quot(a.size() - h.size() + 1, mpz_class(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class c = a[k + h.size() - 1];
        if (c == 0) continue;
        quot[k] = c;
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {
            a[k + i] -= c * h[i];
            a[k + i] %= m;
            if (a[k + i] < 0) a[k + i] += m;
        }
        a[k + h.size() - 1] = 0;
    }
    a.resize(h.size() - 1);
    qtrim(a);
    return {std::move(quot), std::move(a)};
}

// s*a + t*b == 1 mod q for coprime a, b with deg b >= 1; deg s < deg b and
// deg t < deg a on return.
std::pair<PPoly, PPoly> bezout_coprime(const PPoly& a, const PPoly& b, std::uint64_t q) {
    PPoly r0 = a, r1 = b, s0{1}, s1{};
    while (!detail::pis_zero(r1)) {
        PPoly rem = r0;
        PPoly quo = detail::pdivmod(rem, r1, q);
        PPoly s2 = detail::psub(s0, detail::pmul(quo, s1, q), q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    PPoly s = detail::pmul_scalar(s0, detail::invmod(r0[0], q), q);
    s = detail::pmod(std::move(s), b, q);
    PPoly num = detail::psub(PPoly{1}, detail::pmul(s, a, q), q);
    PPoly t = detail::pdivmod(num, b, q);
    return {std::move(s), std::move(t)};
}

struct HenselNode {
    QPoly val;   // product of the covered modular factors, monic
    QPoly s, t;  // s*left->val + t*right->val == 1 at the current modulus
    std::unique_ptr<HenselNode> left, right;
};

std::unique_ptr<HenselNode> build_tree(const std::vector<PPoly>& fs, std::size_t lo,
                                       std::size_t hi, std::uint64_t q) {
    auto node = std::make_unique<HenselNode>();
    if (hi - lo == 1) {
        node->val = to_qpoly(fs[lo]);
        return node;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    node->left = build_tree(fs, lo, mid, q);
    node->right = build_tree(fs, mid, hi, q);
    mpz_class mq(static_cast<unsigned long>(q));
    node->val = qmul(node->left->val, node->right->val, mq);
    auto [s, t] = bezout_coprime(to_ppoly(node->left->val), to_ppoly(node->right->val), q);
    node->s = to_qpoly(s);
    node->t = to_qpoly(t);
    return node;
}

// One quadratic step: the node covers f at the doubled modulus m2; children
// move from the previous modulus to m2 with the coprime certificate repaired.
void lift_node(HenselNode& nd, const QPoly& f, const mpz_class& m2) {
    nd.val = f;
    if (!nd.left) return;
    const QPoly& g = nd.left->val;
    const QPoly& h = nd.right->val;
    QPoly e = qsub(f, qmul(g, h, m2), m2);
    auto [qq, r] = qdivmod_monic(qmul(nd.s, e, m2), h, m2);
    QPoly gstar = qadd(g, qadd(qmul(nd.t, e, m2), qmul(qq, g, m2), m2), m2);
    QPoly hstar = qadd(h, r, m2);
    QPoly b = qsub(qadd(qmul(nd.s, gstar, m2), qmul(nd.t, hstar, m2), m2), QPoly{1}, m2);
    auto [c, d] = qdivmod_monic(qmul(nd.s, b, m2), hstar, m2);
    nd.s = qsub(nd.s, d, m2);
    nd.t = qsub(nd.t, qadd(qmul(nd.t, b, m2), qmul(c, gstar, m2), m2), m2);
    lift_node(*nd.left, gstar, m2);
    lift_node(*nd.right, hstar, m2);
}

void collect_leaves(const HenselNode& nd, std::vector<QPoly>& out) {
    if (!nd.left) {
        out.push_back(nd.val);
        return;
    }
    collect_leaves(*nd.left, out);
    collect_leaves(*nd.right, out);
}

ZPoly balanced(const QPoly& a, const mpz_class& m) {
    const mpz_class half = m / 2;
    ZPoly r(a.begin(), a.end());
    for (auto& c : r)
        if (c > half) c -= m;
    detail::trim(r);
    return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Irreducible factors of a primitive squarefree polynomial with positive
// leading coefficient and nonzero constant term; output factors are primitive
// with positive leading coefficients.
std::vector<ZPoly> factor_squarefree(const ZPoly& p) {
    if (detail::deg(p) == 1) return {p};

    std::uint64_t best_q = 0;
    std::vector<PPoly> best_factors;
    int good = 0;
    for (std::uint64_t q = 3; good < kPrimeCandidates; q = next_odd_prime(q)) {
        PPoly monic;
        if (!mod_squarefree_image(p, q, monic)) continue;
        std::mt19937_64 rng(kSplitSeed);
        auto fs = detail::factor_monic_squarefree_mod(monic, q, rng);
        ++good;
        if (best_q == 0 || fs.size() < best_factors.size()) {
            best_q = q;
            best_factors = std::move(fs);
            if (best_factors.size() == 1) break;
        }
    }
    if (best_factors.size() == 1) return {p};

    // Lift until the modulus exceeds twice a coefficient bound for any
    // divisor of p scaled by the leading coefficient.
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), detail::norm2_squared(p).get_mpz_t());
    bound += 1;
    bound *= abs(p.back());
    bound <<= detail::deg(p) + 1;

    const std::uint64_t q = best_q;
    auto root = build_tree(best_factors, 0, best_factors.size(), q);
    mpz_class m(static_cast<unsigned long>(q));
    const mpz_class& lead = p.back();
    while (m <= bound) {
        mpz_class m2 = m * m;
        mpz_class inv_lead;
        mpz_invert(inv_lead.get_mpz_t(), lead.get_mpz_t(), m2.get_mpz_t());
        QPoly f(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            f[i] = p[i] * inv_lead;
            f[i] %= m2;
            if (f[i] < 0) f[i] += m2;
        }
        lift_node(*root, f, m2);
        m = std::move(m2);
    }
    std::vector<QPoly> lifted;
    collect_leaves(*root, lifted);

    // Recombine subsets, smallest cardinality first; every true factor shows
    // up as the primitive part of a balanced candidate product.
    std::vector<ZPoly> out;
    std::vector<std::size_t> remaining(lifted.size());
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    ZPoly current = p;
    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        bool found = false;
        do {
            int dsum = 0;
            for (std::size_t pos : idx)
                dsum += static_cast<int>(lifted[remaining[pos]].size()) - 1;
            if (dsum >= detail::deg(current)) continue;
            QPoly cand{mpz_class(current.back() % m)};
            if (cand[0] < 0) cand[0] += m;
            for (std::size_t pos : idx) cand = qmul(cand, lifted[remaining[pos]], m);
            ZPoly g = detail::primitive_part(balanced(cand, m));
            if (auto quot = detail::divide_exact(current, g)) {
                out.push_back(std::move(g));
                current = std::move(*quot);
                for (std::size_t i = idx.size(); i-- > 0;)
                    remaining.erase(remaining.begin() + static_cast<long>(idx[i]));
                found = true;
                break;
            }
        } while (next_combination(idx, remaining.size()));
        if (!found) ++s;
    }
    if (detail::deg(current) >= 1) out.push_back(std::move(current));
    return out;
}

}  // namespace

std::vector<SquarefreePart> squarefree_decompose(const IntLaurentSeq& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero input");
    if (p.offset() != 0)
        throw std::invalid_argument("squarefree_decompose: constant term must be nonzero");
    ZPoly zp = detail::from_seq(p);
    if (detail::content(zp) != 1)
        throw std::invalid_argument("squarefree_decompose: input must be primitive");

    const bool neg_lead = sgn(zp.back()) < 0;
    if (detail::deg(zp) == 0) {
        std::vector<SquarefreePart> out;
        if (neg_lead) out.push_back({p, 1});
        return out;
    }
    if (neg_lead) zp = detail::neg(zp);
    auto parts = yun_parts(zp);

    std::size_t flip = parts.size();
    if (neg_lead) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i].second % 2 == 1) {
                flip = i;
                break;
            }
        if (flip == parts.size())
            throw std::invalid_argument(
                "squarefree_decompose: negated square has no exact decomposition");
    }
    std::vector<SquarefreePart> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ZPoly part = i == flip ? detail::neg(parts[i].first) : parts[i].first;
        out.push_back({detail::to_seq(part, 0), parts[i].second});
    }
    return out;
}

std::optional<std::vector<ModPoly>> factor_mod_p(const IntLaurentSeq& p, std::uint64_t q) {
    if (q < 3 || !is_small_prime(q))
        throw std::invalid_argument("factor_mod_p: modulus must be an odd prime");
    if (p.is_zero()) throw std::invalid_argument("factor_mod_p: zero input");
    if (p.offset() < 0)
        throw std::invalid_argument("factor_mod_p: negative powers of z");
    ZPoly dense(static_cast<std::size_t>(p.offset()), mpz_class(0));
    dense.insert(dense.end(), p.coeffs().begin(), p.coeffs().end());
    PPoly monic;
    if (!mod_squarefree_image(dense, q, monic)) return std::nullopt;
    std::mt19937_64 rng(kSplitSeed);
    return detail::factor_monic_squarefree_mod(monic, q, rng);
}

IntLaurentSeq IrreducibleFactorization::reconstruct() const {
    IntLaurentSeq r(0, {mpz_class(sign) * content});
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) r = multiply(r, f.poly);
    return shifted(r, shift);
}

IrreducibleFactorization factor(const IntLaurentSeq& f) {
    if (f.is_zero()) throw std::invalid_argument("factor: zero input");
    IrreducibleFactorization out;
    out.shift = f.offset();
    ZPoly p = detail::from_seq(f);
    out.content = detail::content(p);
    for (auto& c : p) c /= out.content;
    if (sgn(p.front()) < 0) {
        out.sign = -1;
        p = detail::neg(p);
    }
    if (detail::deg(p) == 0) return out;

    if (sgn(p.back()) < 0) p = detail::neg(p);  // part signs wash out below
    for (const auto& [part, mult] : yun_parts(p)) {
        for (ZPoly& g : factor_squarefree(part)) {
            if (sgn(g.front()) < 0) g = detail::neg(g);
            out.factors.push_back({detail::to_seq(g, 0), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
                  return seq_less(a.poly, b.poly);
              });
    std::vector<IrreducibleFactor> merged;
    for (auto& fac : out.factors) {
        if (!merged.empty() && merged.back().poly == fac.poly)
            merged.back().multiplicity += fac.multiplicity;
        else
            merged.push_back(std::move(fac));
    }
    out.factors = std::move(merged);
    return out;
}

}  // namespace equicorr
