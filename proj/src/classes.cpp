#include "equicorr/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "zpoly.hpp"

namespace equicorr {

namespace {

constexpr long kClassCountCap = 1000000;

}  // namespace

IntLaurentSeq gcd_seq(const IntLaurentSeq& f, const IntLaurentSeq& g) {
    if (f.is_zero()) return canonical_associate(g);
    if (g.is_zero()) return canonical_associate(f);
    detail::ZPoly a = detail::from_seq(canonical_associate(f));
    detail::ZPoly b = detail::from_seq(canonical_associate(g));
    return canonical_associate(detail::to_seq(detail::gcd(a, b), 0));
}

IntLaurentSeq PalindromicSplit::reconstruct() const {
    IntLaurentSeq r(0, {mpz_class(sign) * content});
    for (const auto& f : palindromic)
        for (int i = 0; i < f.multiplicity; ++i) r = multiply(r, f.poly);
    for (const auto& p : pairs) {
        for (int i = 0; i < p.b; ++i) r = multiply(r, p.g);
        for (int i = 0; i < p.c; ++i) r = multiply(r, p.conj_g);
    }
    return shifted(r, shift);
}

PalindromicSplit palindromic_split(const IrreducibleFactorization& fact) {
    PalindromicSplit split;
    split.sign = fact.sign;
    split.shift = fact.shift;
    split.content = fact.content;

    std::map<IntLaurentSeq, ConjugatePair, decltype(&seq_less)> pairs(&seq_less);
    for (const auto& f : fact.factors) {
        if (palindrome_kind(f.poly) != PalindromeKind::none) {
            split.palindromic.push_back(f);
            continue;
        }
        IntLaurentSeq partner = canonical_associate(conjugate(f.poly));
        const bool forward = seq_less(f.poly, partner);
        const IntLaurentSeq& g = forward ? f.poly : partner;
        auto [it, inserted] = pairs.try_emplace(g);
        if (inserted) {
            it->second.g = g;
            it->second.conj_g = forward ? partner : f.poly;
        }
        (forward ? it->second.b : it->second.c) += f.multiplicity;
    }
    split.pairs.reserve(pairs.size());
    for (auto& [g, pair] : pairs) split.pairs.push_back(std::move(pair));
    return split;
}

mpz_class class_count(const PalindromicSplit& split) {
    mpz_class n = 1;
    for (const auto& p : split.pairs) n *= p.b + p.c + 1;
    return n;
}

EquicorrClassReport enumerate_class(const PalindromicSplit& split) {
    EquicorrClassReport report;
    report.N = class_count(split);
    if (report.N > kClassCountCap)
        throw std::overflow_error("enumerate_class: class count exceeds the enumeration cap");
    report.nontrivial = report.N >= 3;

    IntLaurentSeq base = IntLaurentSeq::one();
    for (const auto& f : split.palindromic)
        for (int i = 0; i < f.multiplicity; ++i) base = multiply(base, f.poly);

    const std::size_t np = split.pairs.size();
    std::vector<std::vector<IntLaurentSeq>> gpow(np), cpow(np);
    std::vector<int> total(np);
    for (std::size_t i = 0; i < np; ++i) {
        total[i] = split.pairs[i].b + split.pairs[i].c;
        gpow[i].resize(static_cast<std::size_t>(total[i]) + 1);
        cpow[i].resize(static_cast<std::size_t>(total[i]) + 1);
        gpow[i][0] = cpow[i][0] = IntLaurentSeq::one();
        for (int k = 1; k <= total[i]; ++k) {
            gpow[i][static_cast<std::size_t>(k)] =
                multiply(gpow[i][static_cast<std::size_t>(k) - 1], split.pairs[i].g);
            cpow[i][static_cast<std::size_t>(k)] =
                multiply(cpow[i][static_cast<std::size_t>(k) - 1], split.pairs[i].conj_g);
        }
    }

    std::vector<int> bprime(np, 0);
    for (;;) {
        IntLaurentSeq rep = base;
        for (std::size_t i = 0; i < np; ++i) {
            rep = multiply(rep, gpow[i][static_cast<std::size_t>(bprime[i])]);
            rep = multiply(rep, cpow[i][static_cast<std::size_t>(total[i] - bprime[i])]);
        }
        rep = canonical_associate(rep);
        report.associate_reps.push_back(rep);

        // b' <= c' in lexicographic order, coordinates in pair sort order
        int cmp = 0;
        for (std::size_t i = 0; i < np && cmp == 0; ++i)
            cmp = bprime[i] - (total[i] - bprime[i]);
        if (cmp <= 0) {
            IntLaurentSeq t = canonical_trivial(rep);
            if (cmp == 0) report.self_conjugate_rep = t;
            report.trivial_reps.push_back(std::move(t));
        }

        std::size_t pos = np;
        while (pos > 0 && bprime[pos - 1] == total[pos - 1]) bprime[--pos] = 0;
        if (pos == 0) break;
        ++bprime[pos - 1];
    }

    std::sort(report.associate_reps.begin(), report.associate_reps.end(), seq_less);
    std::sort(report.trivial_reps.begin(), report.trivial_reps.end(), seq_less);
    report.binary_members = binary_members(report);
    return report;
}

std::vector<IntLaurentSeq> binary_members(const EquicorrClassReport& report) {
    std::vector<IntLaurentSeq> out;
    for (const auto& t : report.trivial_reps)
        if (is_binary(t)) out.push_back(t);
    return out;
}

EquicorrClassReport class_report(const IntLaurentSeq& f) {
    if (f.is_zero()) {
        EquicorrClassReport report;
        report.associate_reps.push_back(IntLaurentSeq::zero());
        report.trivial_reps.push_back(IntLaurentSeq::zero());
        report.self_conjugate_rep = IntLaurentSeq::zero();
        return report;
    }
    return enumerate_class(palindromic_split(factor(f)));
}

CorollaryOutcome check_palindrome_corollaries(const IntLaurentSeq& f,
                                              const IntLaurentSeq& g) {
    if (f.is_zero() && g.is_zero()) return CorollaryOutcome::exempt_both_zero;
    const PalindromeKind kf = palindrome_kind(f);
    const PalindromeKind kg = palindrome_kind(g);
    if (kf == PalindromeKind::none || kg == PalindromeKind::none)
        return CorollaryOutcome::not_applicable;
    const bool mixed = (kf == PalindromeKind::palindrome &&
                        kg == PalindromeKind::antipalindrome) ||
                       (kf == PalindromeKind::antipalindrome &&
                        kg == PalindromeKind::palindrome);
    if (!equicorrelational(f, g))
        return mixed ? CorollaryOutcome::disjointness_confirmed
                     : CorollaryOutcome::not_equicorrelational;
    if (mixed) return CorollaryOutcome::violated;
    return canonical_associate(f) == canonical_associate(g)
               ? CorollaryOutcome::associates_confirmed
               : CorollaryOutcome::violated;
}

}  // namespace equicorr
