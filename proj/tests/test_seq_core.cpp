#include "doctest.h"

#include <random>
#include <vector>

#include "equicorr/seq.hpp"
#include "test_util.hpp"

using namespace equicorr;

namespace {

IntLaurentSeq seq(long offset, std::vector<long> cs) {
    std::vector<mpz_class> coeffs(cs.begin(), cs.end());
    return IntLaurentSeq(offset, std::move(coeffs));
}

}  // namespace

TEST_SUITE("seq_core") {

TEST_CASE("construction trims zero ends") {
    IntLaurentSeq f = seq(5, {0, 1, -1, 0});
    CHECK(f.offset() == 6);
    CHECK(f.length() == 2);
    CHECK(f.coeff(6) == 1);
    CHECK(f.coeff(7) == -1);
    CHECK(f.coeff(5) == 0);
    CHECK(f.coeff(100) == 0);

    CHECK(seq(3, {0, 0}).is_zero());
    CHECK(seq(3, {0, 0}) == IntLaurentSeq::zero());
    CHECK(IntLaurentSeq::zero().length() == 0);
    CHECK(IntLaurentSeq::ones(4) == seq(0, {1, 1, 1, 1}));
    CHECK(IntLaurentSeq::monomial(-3, 2) == seq(2, {-3}));
}

TEST_CASE("conjugate reverses and reflects the support") {
    CHECK(conjugate(IntLaurentSeq::zero()).is_zero());
    CHECK(conjugate(seq(0, {1, -1})) == seq(-1, {-1, 1}));

    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 10, 9);
        CHECK(conjugate(conjugate(f)) == f);
        CHECK(conjugate(f).length() == f.length());
    }
}

TEST_CASE("multiply is the exact ring product") {
    CHECK(multiply(seq(0, {1, 1}), seq(0, {1, -1})) == seq(0, {1, 0, -1}));

    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 8, 9);
        IntLaurentSeq g = testutil::random_seq(rng, 8, 9);
        CHECK(multiply(f, IntLaurentSeq::zero()).is_zero());
        CHECK(multiply(f, IntLaurentSeq::one()) == f);
        if (!f.is_zero() && !g.is_zero())
            CHECK(multiply(f, g).length() == f.length() + g.length() - 1);
        CHECK(multiply(f, g) == multiply(g, f));
        CHECK(conjugate(multiply(f, g)) == multiply(conjugate(f), conjugate(g)));
    }
}

TEST_CASE("autocorrelation of the all-ones triple") {
    AutocorrFunction ac = autocorrelation(seq(0, {1, 1, 1}));
    CHECK(ac.peak() == 3);
    CHECK(ac.at(1) == 2);
    CHECK(ac.at(-1) == 2);
    CHECK(ac.at(2) == 1);
    CHECK(ac.at(-2) == 1);
    CHECK(ac.at(3) == 0);
    CHECK(autocorrelation(IntLaurentSeq::zero()).function().is_zero());
}

TEST_CASE("autocorrelation is symmetric and unit-invariant") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 10, 9);
        AutocorrFunction ac = autocorrelation(f);
        for (long s = -11; s <= 11; ++s) CHECK(ac.at(s) == ac.at(-s));
        CHECK(ac == autocorrelation(negate(f)));
        CHECK(ac == autocorrelation(conjugate(f)));
        CHECK(ac == autocorrelation(shifted(f, 4)));
        if (!f.is_zero()) CHECK(ac.peak() > 0);
    }
    for (int n = 1; n <= 12; ++n) {
        IntLaurentSeq b = testutil::random_binary(rng, n);
        CHECK(autocorrelation(b).peak() == n);
    }
}

TEST_CASE("substitute stretches exponents") {
    CHECK(substitute(seq(0, {1, 1}), 2) == seq(0, {1, 0, 1}));
    CHECK(substitute(seq(0, {1, 1, 1}), 3).length() == 7);
    CHECK_THROWS_AS(substitute(seq(0, {1, 1}), 0), std::invalid_argument);

    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 10, 9);
        CHECK(substitute(f, 1) == f);
        CHECK(substitute(f, -1) == conjugate(f));
        for (long m : {2L, 3L, -2L}) {
            IntLaurentSeq g = substitute(f, m);
            if (!f.is_zero())
                CHECK(g.length() ==
                      (f.length() - 1) * static_cast<std::size_t>(m < 0 ? -m : m) + 1);
        }
    }
}

TEST_CASE("canonical_associate strips units and content") {
    CHECK(canonical_associate(seq(5, {-2, 2})) == seq(0, {1, -1}));
    CHECK(canonical_associate(IntLaurentSeq::zero()).is_zero());

    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 10, 9);
        IntLaurentSeq c = canonical_associate(f);
        CHECK(canonical_associate(c) == c);
        CHECK(canonical_associate(scaled(shifted(f, -7), 3)) == c);
        CHECK(canonical_associate(negate(f)) == c);
        if (!f.is_zero()) {
            CHECK(c.offset() == 0);
            CHECK(content(c) == 1);
            CHECK(c.coeffs().front() > 0);
        }
    }
}

TEST_CASE("canonical_trivial is constant on trivial classes") {
    CHECK(canonical_trivial(seq(0, {1, -1})) == seq(0, {1, -1}));
    CHECK(canonical_trivial(seq(0, {1, 1, -1})) == seq(0, {1, -1, -1}));
    CHECK(canonical_trivial(seq(0, {-1, 1, 1})) == seq(0, {1, -1, -1}));

    std::mt19937_64 rng(6);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 10, 9);
        IntLaurentSeq t = canonical_trivial(f);
        CHECK(canonical_trivial(conjugate(f)) == t);
        CHECK(canonical_trivial(scaled(shifted(f, 4), -3)) == t);
        CHECK(canonical_trivial(canonical_trivial(f)) == t);
    }
}

TEST_CASE("palindrome_kind classifies coefficient symmetry") {
    CHECK(palindrome_kind(seq(0, {1, 2, 1})) == PalindromeKind::palindrome);
    CHECK(palindrome_kind(seq(0, {1, 0, -1})) == PalindromeKind::antipalindrome);
    CHECK(palindrome_kind(seq(0, {1, 1, -1})) == PalindromeKind::none);
    CHECK(palindrome_kind(IntLaurentSeq::zero()) == PalindromeKind::palindrome);
    CHECK(palindrome_kind(seq(0, {5})) == PalindromeKind::palindrome);

    CHECK(is_generalized_palindrome(seq(-3, {1, 2, 1})));
    CHECK(is_generalized_palindrome(seq(2, {1, 0, -1})));
    CHECK(!is_generalized_palindrome(seq(0, {1, 1, -1})));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 10, 9);
        // A generalized palindrome is exactly a sequence associate to its
        // conjugate; shifting and scaling never change the classification.
        CHECK(palindrome_kind(f) == palindrome_kind(shifted(f, 3)));
        CHECK(is_generalized_palindrome(f) ==
              (canonical_associate(f) == canonical_associate(conjugate(f))));
        CHECK(palindrome_kind(f) != PalindromeKind::generalized_palindrome_other);
    }
}

TEST_CASE("classify_kind recognizes binary sequences") {
    CHECK(classify_kind(IntLaurentSeq::zero()) == SeqKind::zero);
    CHECK(classify_kind(seq(2, {1, -1, 1})) == SeqKind::binary);
    CHECK(classify_kind(seq(0, {1, 2, -1})) == SeqKind::contiguous_integer);
    CHECK(classify_kind(seq(0, {1, 0, -1})) == SeqKind::general_integer);
    CHECK(is_binary(seq(0, {1, 1, -1})));
    CHECK(!is_binary(seq(0, {1, 0, 1})));
    CHECK(!is_binary(IntLaurentSeq::zero()));
}

TEST_CASE("equicorrelational compares autocorrelations up to positive scale") {
    IntLaurentSeq f = seq(0, {1, 1, -1});
    CHECK(equicorrelational(f, scaled(shifted(f, 3), 2)));
    CHECK(!equicorrelational(f, IntLaurentSeq::zero()));
    CHECK(equicorrelational(IntLaurentSeq::zero(), IntLaurentSeq::zero()));
    CHECK(!equicorrelational(seq(0, {1, 1}), seq(0, {1, -1})));

    // g*g and g*conj(g) share an autocorrelation but are not associates when
    // g is not a generalized palindrome.
    IntLaurentSeq g = seq(0, {1, 1, -1});
    IntLaurentSeq a = multiply(g, g);
    IntLaurentSeq b = multiply(g, conjugate(g));
    CHECK(equicorrelational(a, b));
    CHECK(!trivially_equicorrelational(a, b));
    CHECK(canonical_trivial(a) != canonical_trivial(b));

    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq h = testutil::random_seq(rng, 10, 9);
        CHECK(equicorrelational(h, h));
        CHECK(equicorrelational(h, conjugate(h)));
        CHECK(equicorrelational(h, scaled(shifted(h, -2), 5)));
        CHECK(trivially_equicorrelational(h, conjugate(h)));
        CHECK(trivially_equicorrelational(h, scaled(shifted(h, 1), -4)));
        if (!h.is_zero()) {
            IntLaurentSeq k = testutil::random_seq(rng, 10, 9, false);
            if (equicorrelational(h, k)) CHECK(h.length() == k.length());
        }
    }
}

TEST_CASE("equicorrelational needs only proportional autocorrelations") {
    IntLaurentSeq f = seq(0, {1, 1});
    IntLaurentSeq g = scaled(f, 3);
    CHECK(autocorrelation(f) != autocorrelation(g));
    CHECK(equicorrelational(f, g));
}

TEST_CASE("divides and divide_exact invert multiply") {
    CHECK(divides(seq(0, {1, 1}), seq(0, {1, 0, -1})));
    CHECK(divide_exact(seq(0, {1, 0, -1}), seq(0, {1, 1})) == seq(0, {1, -1}));
    CHECK(!divides(seq(0, {1, 1}), seq(0, {1, 1, 1})));
    CHECK_THROWS_AS(divide_exact(seq(0, {1, 1, 1}), seq(0, {1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(divides(IntLaurentSeq::zero(), seq(0, {1, 1})),
                    std::invalid_argument);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq f = testutil::random_seq(rng, 6, 9, false);
        IntLaurentSeq g = testutil::random_seq(rng, 6, 9, false);
        IntLaurentSeq p = multiply(f, g);
        CHECK(divides(f, p));
        CHECK(divides(g, p));
        CHECK(divide_exact(p, f) == canonical_associate(g));
    }
}

TEST_CASE("seq_less is a strict total order") {
    CHECK(seq_less(seq(0, {1, -1}), seq(0, {1, 1})));
    CHECK(seq_less(seq(0, {1, 1}), seq(0, {1, 1, -1})));
    CHECK(seq_less(seq(-1, {1, 1}), seq(0, {1, 1})));
    CHECK(!seq_less(seq(0, {1, 1}), seq(0, {1, 1})));

    std::mt19937_64 rng(10);
    for (int i = 0; i < 300; ++i) {
        IntLaurentSeq a = testutil::random_seq(rng, 5, 3);
        IntLaurentSeq b = testutil::random_seq(rng, 5, 3);
        IntLaurentSeq c = testutil::random_seq(rng, 5, 3);
        CHECK(!(seq_less(a, b) && seq_less(b, a)));
        CHECK(((a == b) || seq_less(a, b) || seq_less(b, a)));
        if (seq_less(a, b) && seq_less(b, c)) CHECK(seq_less(a, c));
    }
}

}  // TEST_SUITE
