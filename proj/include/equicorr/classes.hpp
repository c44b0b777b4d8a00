#ifndef EQUICORR_CLASSES_HPP
#define EQUICORR_CLASSES_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "equicorr/factor.hpp"
#include "equicorr/seq.hpp"

namespace equicorr {

/// Canonical-associate representative of a greatest common divisor in the
/// rational Laurent ring; gcd_seq(0, 0) is 0.
IntLaurentSeq gcd_seq(const IntLaurentSeq& f, const IntLaurentSeq& g);

/// An irreducible that is not a generalized palindrome, paired with the
/// canonical form of its reversal.  g is the seq_less-smaller orientation;
/// b and c are the multiplicities of g and conj_g in the factored sequence.
struct ConjugatePair {
    IntLaurentSeq g;
    IntLaurentSeq conj_g;
    int b = 0;
    int c = 0;

    friend bool operator==(const ConjugatePair&, const ConjugatePair&) = default;
};

/// Factorization partitioned into generalized-palindrome irreducibles and
/// conjugate pairs.  sign * content * z^shift * prod(palindromic) *
/// prod(g^b * conj_g^c) reproduces the factored sequence.
struct PalindromicSplit {
    int sign = 1;
    long shift = 0;
    mpz_class content = 1;
    std::vector<IrreducibleFactor> palindromic;
    std::vector<ConjugatePair> pairs;

    IntLaurentSeq reconstruct() const;
};

PalindromicSplit palindromic_split(const IrreducibleFactorization& fact);

/// Number of associate classes sharing the split's autocorrelation:
/// prod(b_j + c_j + 1).
mpz_class class_count(const PalindromicSplit& split);

/// The full equicorrelationality class of a sequence: all associate-class
/// representatives, the trivial-class representatives (conjugate orbits
/// merged), and the binary members.
struct EquicorrClassReport {
    mpz_class N = 1;
    std::vector<IntLaurentSeq> associate_reps;  // canonical associates, sorted
    std::vector<IntLaurentSeq> trivial_reps;    // ceil(N/2) canonical forms, sorted
    std::optional<IntLaurentSeq> self_conjugate_rep;  // present iff N odd
    std::vector<IntLaurentSeq> binary_members;  // one canonical binary per trivial class
    bool nontrivial = false;                    // N >= 3
};

/// Enumerates every (b', c') exponent assignment of the split.  Throws
/// std::overflow_error when the class count exceeds 10^6.
EquicorrClassReport enumerate_class(const PalindromicSplit& split);

/// The canonical binary representatives of the report's trivial classes;
/// the count is the volume of the binary equicorrelationality class.
std::vector<IntLaurentSeq> binary_members(const EquicorrClassReport& report);

/// factor -> palindromic_split -> enumerate_class; the zero sequence yields
/// the singleton report for the class {0}.
EquicorrClassReport class_report(const IntLaurentSeq& f);

enum class CorollaryOutcome {
    exempt_both_zero,
    not_applicable,            // inputs are not both generalized palindromes
    not_equicorrelational,
    associates_confirmed,      // equicorrelational generalized palindromes agree
    disjointness_confirmed,    // palindrome vs antipalindrome, not equicorrelational
    violated,
};

/// Checks the two palindrome consequences on a pair of sequences: two
/// equicorrelational generalized palindromes must be associates, and a
/// nonzero palindrome is never equicorrelational to a nonzero antipalindrome.
CorollaryOutcome check_palindrome_corollaries(const IntLaurentSeq& f,
                                              const IntLaurentSeq& g);

}  // namespace equicorr

#endif
