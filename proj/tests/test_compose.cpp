#include "doctest.h"

#include <random>
#include <vector>

#include "equicorr/classes.hpp"
#include "equicorr/compose.hpp"
#include "equicorr/search.hpp"
#include "equicorr/seq.hpp"
#include "test_util.hpp"

using namespace equicorr;

namespace {

IntLaurentSeq seq(long offset, std::vector<long> cs) {
    std::vector<mpz_class> coeffs(cs.begin(), cs.end());
    return IntLaurentSeq(offset, std::move(coeffs));
}

/// The length-9 nontrivially equicorrelational binary pair, via the search.
std::pair<IntLaurentSeq, IntLaurentSeq> nine_pair() {
    const auto classes = find_nontrivial_classes(9);
    REQUIRE(classes.size() == 1);
    REQUIRE(classes[0].members.size() == 2);
    return {classes[0].members[0], classes[0].members[1]};
}

}  // namespace

TEST_SUITE("compose") {

TEST_CASE("composition interleaves the inner sequence") {
    CHECK(compose(seq(0, {1, 1}), seq(0, {1, -1}), 2) == seq(0, {1, -1, 1, -1}));
    CHECK(compose(IntLaurentSeq::one(), seq(0, {1, 1, -1}), 3) == seq(0, {1, 1, -1}));
    CHECK_THROWS_AS(compose(seq(0, {1, 1}), seq(0, {1, 1}), 0), std::invalid_argument);

    // length-3 outer, length-4 inner: binary composite of length 12
    const IntLaurentSeq f = compose(seq(0, {1, -1, 1}), seq(0, {1, 1, -1, 1}), 4);
    CHECK(is_binary(f));
    CHECK(f.length() == 12);

    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        const int lo = 1 + static_cast<int>(rng() % 5);
        const int li = 1 + static_cast<int>(rng() % 5);
        const IntLaurentSeq a = testutil::random_binary(rng, lo);
        const IntLaurentSeq b = testutil::random_binary(rng, li);
        const IntLaurentSeq c = compose(a, b, li);
        CHECK(is_binary(c));
        CHECK(c.length() == a.length() * b.length());
        // block structure: coefficient at j*li + k is a_j * b_k
        for (int j = 0; j < lo; ++j)
            for (int k = 0; k < li; ++k)
                CHECK(c.coeffs()[static_cast<std::size_t>(j * li + k)] ==
                      a.coeffs()[static_cast<std::size_t>(j)] *
                          b.coeffs()[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("composites of equicorrelational pairs stay equicorrelational") {
    const IntLaurentSeq a = seq(0, {1, 1, -1});
    CHECK(composition_preserves_equicorr(a, a, a, a, 3, 1) ==
          CompositionCheck::confirmed);
    CHECK(composition_preserves_equicorr(seq(0, {1, 1}), a, seq(0, {1, -1}), a, 2,
                                         1) == CompositionCheck::preconditions_unmet);
    CHECK_THROWS_AS(composition_preserves_equicorr(a, a, a, a, 0, 1),
                    std::invalid_argument);

    const auto [b, d] = nine_pair();
    const IntLaurentSeq ones2 = IntLaurentSeq::ones(2);
    CHECK(composition_preserves_equicorr(ones2, b, ones2, d, 9, 1) ==
          CompositionCheck::confirmed);
    CHECK(compose(ones2, b, 9).length() == 18);

    // degenerate second factor reduces to the outer pair
    CHECK(composition_preserves_equicorr(b, IntLaurentSeq::one(), d,
                                         IntLaurentSeq::one(), 1, 5) ==
          CompositionCheck::confirmed);

    std::mt19937_64 rng(52);
    for (int i = 0; i < 100; ++i) {
        const IntLaurentSeq p = testutil::random_seq(rng, 5, 3, false);
        const IntLaurentSeq q = testutil::random_seq(rng, 5, 3, false);
        // equicorrelational partners: scaled shifts of conjugates
        const IntLaurentSeq pc = scaled(shifted(conjugate(p), 2), -2);
        const IntLaurentSeq qc = scaled(shifted(q, -1), 3);
        const long m = 1 + static_cast<long>(rng() % 3);
        const long n = 1 + static_cast<long>(rng() % 3);
        CHECK(composition_preserves_equicorr(p, q, pc, qc, m, n) ==
              CompositionCheck::confirmed);
    }
}

TEST_CASE("closed-form triviality for block composites") {
    const auto [b, d] = nine_pair();
    const IntLaurentSeq a = seq(0, {1, 1, -1});

    CHECK(composition_is_trivial(a, b, a, b, 9));
    CHECK(composition_is_trivial(a, b, conjugate(a), conjugate(b), 9));
    CHECK(!composition_is_trivial(a, b, a, d, 9));

    // a nontrivial inner pair forces nontrivial composites
    const IntLaurentSeq f = compose(a, b, 9);
    const IntLaurentSeq g = compose(a, d, 9);
    CHECK(equicorrelational(f, g));
    CHECK(!trivially_equicorrelational(f, g));

    CHECK_THROWS_AS(composition_is_trivial(seq(0, {1, 2}), b, seq(0, {1, 2}), b, 9),
                    std::invalid_argument);
    // the conjugate of d is still equicorrelational to b, only off-class
    CHECK(!composition_is_trivial(a, b, a, conjugate(d), 9));

    CHECK_THROWS_AS(composition_is_trivial(a, b, seq(0, {1, 1}), b, 9),
                    std::invalid_argument);
    CHECK_THROWS_AS(composition_is_trivial(a, b, a, b, 3), std::invalid_argument);
    CHECK_THROWS_AS(composition_is_trivial(a, b, seq(0, {1, 1, 1}), b, 9),
                    std::invalid_argument);
}

TEST_CASE("closed form matches the direct composite check exhaustively") {
    for (int lo = 1; lo <= 3; ++lo) {
        const auto outers = testutil::every_binary(lo);
        for (int li = 1; li <= 3; ++li) {
            const auto inners = testutil::every_binary(li);
            for (const auto& a : outers)
                for (const auto& c : outers) {
                    if (!equicorrelational(a, c)) continue;
                    for (const auto& b : inners)
                        for (const auto& d : inners) {
                            if (!equicorrelational(b, d)) continue;
                            const bool closed = composition_is_trivial(a, b, c, d, li);
                            const bool direct = trivially_equicorrelational(
                                compose(a, b, li), compose(c, d, li));
                            CHECK(closed == direct);
                            CHECK(closed == composition_trivial_via_gcd(a, b, c, d,
                                                                        li, 1));
                        }
                }
        }
    }
}

TEST_CASE("gcd criterion matches the direct check on general inputs") {
    CHECK(composition_trivial_via_gcd(IntLaurentSeq::zero(), seq(0, {1, 1}),
                                      seq(0, {1, 2}), IntLaurentSeq::zero(), 2, 3));
    CHECK(!composition_trivial_via_gcd(IntLaurentSeq::zero(), seq(0, {1, 1}),
                                       seq(0, {1, 2}), seq(0, {1, 1}), 2, 3));

    std::mt19937_64 rng(53);
    const long exponents[] = {-2, -1, 1, 2, 3};
    for (int i = 0; i < 250; ++i) {
        // share factors between the slots often enough to hit true verdicts
        const IntLaurentSeq p = testutil::random_seq(rng, 3, 2, false);
        const IntLaurentSeq q = testutil::random_seq(rng, 3, 2, false);
        const IntLaurentSeq r = testutil::random_seq(rng, 3, 2, false);
        IntLaurentSeq a = p, c = q, b = r, d = r;
        switch (rng() % 4) {
            case 0:
                a = multiply(p, q);
                c = multiply(p, conjugate(q));
                break;
            case 1:
                c = conjugate(p);
                b = multiply(r, q);
                d = multiply(conjugate(r), q);
                break;
            case 2:
                a = c = p;
                d = conjugate(r);
                break;
            default:
                d = testutil::random_seq(rng, 3, 2, false);
                break;
        }
        const long m = exponents[rng() % 5];
        const long n = exponents[rng() % 5];
        const IntLaurentSeq f = multiply(substitute(a, m), substitute(b, n));
        const IntLaurentSeq g = multiply(substitute(c, m), substitute(d, n));
        CHECK(composition_trivial_via_gcd(a, b, c, d, m, n) ==
              trivially_equicorrelational(f, g));
    }
}

TEST_CASE("substitution keeps coprimality and units") {
    std::mt19937_64 rng(54);
    for (int i = 0; i < 150; ++i) {
        const IntLaurentSeq f = testutil::random_seq(rng, 5, 3, false);
        const IntLaurentSeq g = testutil::random_seq(rng, 5, 3, false);
        const long m = 1 + static_cast<long>(rng() % 4);
        if (gcd_seq(f, g) == IntLaurentSeq::one())
            CHECK(gcd_seq(substitute(f, m), substitute(g, m)) == IntLaurentSeq::one());

        const IntLaurentSeq unit = seq(static_cast<long>(rng() % 7) - 3,
                                       {static_cast<long>(rng() % 5) + 1});
        CHECK(substitute(unit, m).length() == 1);
    }
}

TEST_CASE("lifting repeats the pair to a multiple length") {
    const auto [b, d] = nine_pair();

    const auto [f18, g18] = lift_equivocal_pair(b, d, 18);
    CHECK(is_binary(f18));
    CHECK(is_binary(g18));
    CHECK(f18.length() == 18);
    CHECK(g18.length() == 18);
    // concatenation of two copies
    for (int j = 0; j < 18; ++j) {
        CHECK(f18.coeffs()[static_cast<std::size_t>(j)] ==
              b.coeffs()[static_cast<std::size_t>(j % 9)]);
        CHECK(g18.coeffs()[static_cast<std::size_t>(j)] ==
              d.coeffs()[static_cast<std::size_t>(j % 9)]);
    }
    CHECK(equicorrelational(f18, g18));
    CHECK(!trivially_equicorrelational(f18, g18));
    CHECK(AutocorrKey::from_word(seq_to_word(f18), 18) ==
          AutocorrKey::from_word(seq_to_word(g18), 18));
    CHECK(canonical_trivial(f18) != canonical_trivial(g18));

    const auto [f27, g27] = lift_equivocal_pair(b, d, 27);
    CHECK(f27.length() == 27);
    CHECK(equicorrelational(f27, g27));
    CHECK(!trivially_equicorrelational(f27, g27));

    const auto [fs, gs] = lift_equivocal_pair(b, d, 9);
    CHECK(fs == b);
    CHECK(gs == d);

    CHECK_THROWS_AS(lift_equivocal_pair(b, d, 10), std::invalid_argument);
    CHECK_THROWS_AS(lift_equivocal_pair(b, conjugate(b), 18), std::invalid_argument);
    CHECK_THROWS_AS(lift_equivocal_pair(seq(0, {1, 2}), seq(0, {2, 1}), 4),
                    std::invalid_argument);
}

}  // TEST_SUITE
