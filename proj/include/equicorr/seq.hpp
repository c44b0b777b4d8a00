#ifndef EQUICORR_SEQ_HPP
#define EQUICORR_SEQ_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace equicorr {

/// A finitely supported doubly infinite integer sequence in Laurent-polynomial
/// form: coeffs[i] is the coefficient of z^(offset + i).  The coefficient list
/// is kept trimmed (first and last entries nonzero); the zero sequence is the
/// empty list at offset 0.
class IntLaurentSeq {
public:
    IntLaurentSeq() = default;

    /// Trims zero ends; an all-zero list collapses to the zero sequence.
    IntLaurentSeq(long offset, std::vector<mpz_class> coeffs);

    static IntLaurentSeq zero() { return {}; }
    static IntLaurentSeq one() { return monomial(1, 0); }
    static IntLaurentSeq monomial(mpz_class c, long exponent);

    /// 1 + z + ... + z^(n-1); the length-n all-ones sequence.
    static IntLaurentSeq ones(std::size_t n);

    bool is_zero() const { return coeffs_.empty(); }

    /// Exponent of the lowest-degree term (0 for the zero sequence).
    long offset() const { return offset_; }

    /// Exponent of the highest-degree term; offset() - 1 when zero.
    long top_exponent() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }

    /// Number of terms in the smallest segment containing the support.
    std::size_t length() const { return coeffs_.size(); }

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    /// Coefficient of z^exponent (zero outside the stored segment).
    const mpz_class& coeff(long exponent) const;

    bool operator==(const IntLaurentSeq&) const = default;

private:
    long offset_ = 0;
    std::vector<mpz_class> coeffs_;
};

/// Fixed total order: coefficient lists compared left to right by integer
/// value, shorter list first on prefix ties, offset as the final tiebreak.
bool seq_less(const IntLaurentSeq& a, const IntLaurentSeq& b);

IntLaurentSeq negate(const IntLaurentSeq& f);
IntLaurentSeq shifted(const IntLaurentSeq& f, long j);
IntLaurentSeq scaled(const IntLaurentSeq& f, const mpz_class& c);

/// Reverses the sequence: the coefficient of z^j moves to z^(-j).
IntLaurentSeq conjugate(const IntLaurentSeq& f);

/// Exact product in the Laurent ring.
IntLaurentSeq multiply(const IntLaurentSeq& f, const IntLaurentSeq& g);

IntLaurentSeq add(const IntLaurentSeq& f, const IntLaurentSeq& g);

/// f(z^m).  Throws std::invalid_argument for m = 0.
IntLaurentSeq substitute(const IntLaurentSeq& f, long m);

/// Positive gcd of all coefficients; 0 for the zero sequence.
mpz_class content(const IntLaurentSeq& f);

/// Canonical representative of the rational associate class: offset 0,
/// content 1, positive constant coefficient.  Idempotent; zero maps to zero.
IntLaurentSeq canonical_associate(const IntLaurentSeq& f);

/// The smaller (under seq_less) of the canonical associates of f and of its
/// conjugate; constant on each trivial equicorrelationality class.
IntLaurentSeq canonical_trivial(const IntLaurentSeq& f);

enum class PalindromeKind {
    palindrome,
    antipalindrome,
    generalized_palindrome_other,  // reserved; never produced for integer input
    none,
};

/// Symmetry classification of the coefficient list.  The zero sequence
/// reports palindrome (it satisfies both symmetries).
PalindromeKind palindrome_kind(const IntLaurentSeq& f);

/// True for palindromes and antipalindromes; over the integers these are the
/// only generalized palindromes.
bool is_generalized_palindrome(const IntLaurentSeq& f);

enum class SeqKind {
    zero,
    binary,              // every coefficient +1 or -1, contiguous support
    contiguous_integer,  // no interior zero coefficients
    general_integer,
};

SeqKind classify_kind(const IntLaurentSeq& f);
bool is_binary(const IntLaurentSeq& f);

/// The autocorrelation function f * conj(f): self-conjugate, coefficient of
/// z^s is the aperiodic autocorrelation at shift s.
class AutocorrFunction {
public:
    const IntLaurentSeq& function() const { return fn_; }

    /// Autocorrelation value at the given shift.
    const mpz_class& at(long shift) const { return fn_.coeff(shift); }

    /// Value at shift 0; the squared Euclidean norm of the sequence.
    const mpz_class& peak() const { return at(0); }

    bool operator==(const AutocorrFunction&) const = default;

private:
    friend AutocorrFunction autocorrelation(const IntLaurentSeq& f);
    explicit AutocorrFunction(IntLaurentSeq fn) : fn_(std::move(fn)) {}

    IntLaurentSeq fn_;
};

AutocorrFunction autocorrelation(const IntLaurentSeq& f);

/// True iff the autocorrelation functions agree up to a positive rational
/// scalar.  Only the zero sequence matches the zero sequence.
bool equicorrelational(const IntLaurentSeq& f, const IntLaurentSeq& g);

/// True iff f and g are associates or one is associate to the conjugate of
/// the other.
bool trivially_equicorrelational(const IntLaurentSeq& f, const IntLaurentSeq& g);

/// True when g divides f in the rational Laurent ring.  Throws
/// std::invalid_argument for zero g.
bool divides(const IntLaurentSeq& g, const IntLaurentSeq& f);

/// canonical_associate of the exact quotient f / g, i.e. division up to
/// associates.  Throws std::invalid_argument when g is zero or does not
/// divide f.
IntLaurentSeq divide_exact(const IntLaurentSeq& f, const IntLaurentSeq& g);

}  // namespace equicorr

#endif
