#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "casson/intform.hpp"
#include "casson/kirby.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace casson;

TEST_CASE("inertia of fixed forms", "[intform]") {
    CHECK(inertia(SymIntMatrix::from_rows({{0, 1}, {1, 0}})) == InertiaTriple{1, 1, 0});
    CHECK(inertia(SymIntMatrix::diagonal({2, -3, 0})) == InertiaTriple{1, 1, 1});
    CHECK(inertia(SymIntMatrix()) == InertiaTriple{0, 0, 0});
    CHECK(inertia(SymIntMatrix::diagonal({5})) == InertiaTriple{1, 0, 0});
}

TEST_CASE("inertia of the rank-14 appendix form at n = 1", "[intform]") {
    // index 8 with rank 14 forces (11, 3, 0); the Sturm oracle must agree
    const SymIntMatrix b = appendix_matrix_B(1);
    CHECK(inertia(b) == InertiaTriple{11, 3, 0});
    CHECK(inertia_oracle(b) == InertiaTriple{11, 3, 0});
}

TEST_CASE("inertia agrees with the Sturm oracle", "[intform]") {
    CHECK(inertia_oracle(SymIntMatrix::diagonal({5})) == InertiaTriple{1, 0, 0});
    CHECK(inertia_oracle(SymIntMatrix::diagonal({1, 1})) == InertiaTriple{2, 0, 0});
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const SymIntMatrix m = testutil::random_symmetric(rng);
        CHECK(inertia(m) == inertia_oracle(m));
    }
    CHECK(inertia(appendix_matrix_A(7)) == inertia_oracle(appendix_matrix_A(7)));
}

TEST_CASE("inertia oracle handles repeated eigenvalues", "[intform]") {
    CHECK(inertia_oracle(SymIntMatrix::diagonal({3, 3, 3, -3, -3, 0, 0})) ==
          InertiaTriple{3, 2, 2});
    const SymIntMatrix h = SymIntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(inertia_oracle(h.direct_sum(h).direct_sum(h)) == InertiaTriple{3, 3, 0});
    const SymIntMatrix e8e8 = e8_matrix().direct_sum(e8_matrix());
    CHECK(inertia_oracle(e8e8) == InertiaTriple{16, 0, 0});
    const SymIntMatrix aa = appendix_matrix_A(2).direct_sum(appendix_matrix_A(2));
    CHECK(inertia_oracle(aa) == inertia(aa));
}

TEST_CASE("index of fixed and appendix forms", "[intform]") {
    CHECK(index(SymIntMatrix::diagonal({1, 1})) == 2);
    for (long long n : {-12LL, -5LL, 0LL, 3LL, 12LL}) {
        CHECK(index(appendix_matrix_A(n)) == 0);
        CHECK(index(appendix_matrix_B(n)) == 8);
    }
}

TEST_CASE("index is a congruence invariant", "[intform]") {
    std::mt19937 rng(424242);
    const SymIntMatrix a0 = appendix_matrix_A(0);
    for (int trial = 0; trial < 10; ++trial) {
        const IntMatrix e = testutil::random_unimodular(rng, a0.size());
        CHECK(index(congruence_apply(a0, e)) == 0);
    }
    for (int trial = 0; trial < 40; ++trial) {
        const SymIntMatrix m = testutil::random_symmetric(rng, 5);
        const IntMatrix e = testutil::random_unimodular(rng, m.size());
        CHECK(inertia(congruence_apply(m, e)) == inertia(m));
    }
}

TEST_CASE("index is additive over direct sums", "[intform]") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const SymIntMatrix a = testutil::random_symmetric(rng, 4);
        const SymIntMatrix b = testutil::random_symmetric(rng, 4);
        CHECK(index(a.direct_sum(b)) == index(a) + index(b));
    }
}

TEST_CASE("rohlin invariant of even unimodular forms", "[intform]") {
    CHECK(rohlin_mu(e8_matrix()) == 1);
    CHECK(rohlin_mu(SymIntMatrix::from_rows({{0, 1}, {1, 0}})) == 0);
    for (long long n : {-11LL, -3LL, 1LL, 7LL}) CHECK(rohlin_mu(appendix_matrix_B(n)) == 1);
    for (long long n : {-12LL, -2LL, 0LL, 6LL}) CHECK(rohlin_mu(appendix_matrix_A(n)) == 0);
}

TEST_CASE("rohlin invariant rejects bad inputs", "[intform]") {
    CHECK_ERROR_NAME(rohlin_mu(SymIntMatrix::diagonal({1, 1})), "NotEven");
    CHECK_ERROR_NAME(rohlin_mu(SymIntMatrix::diagonal({2})), "NotUnimodular");
}

TEST_CASE("even unimodular forms have index divisible by 8", "[intform]") {
    // direct sums of hyperbolic planes and +-E8 blocks, in a random basis
    std::mt19937 rng(2718281);
    const SymIntMatrix h = SymIntMatrix::from_rows({{0, 1}, {1, 0}});
    std::uniform_int_distribution<int> nh(0, 2), ne(0, 1), se(0, 1);
    for (int trial = 0; trial < 12; ++trial) {
        SymIntMatrix m;
        for (int i = nh(rng); i > 0; --i) m = m.direct_sum(h);
        for (int i = ne(rng); i > 0; --i)
            m = m.direct_sum(se(rng) ? e8_matrix() : e8_matrix().negated());
        if (m.size() == 0) continue;
        const SymIntMatrix moved = congruence_apply(m, testutil::random_unimodular(rng, m.size()));
        CHECK(parity_type(moved) == Parity::Even);
        CHECK(is_unimodular(moved));
        CHECK(index(moved) % 8 == 0);
    }
}

TEST_CASE("parity is a congruence invariant", "[intform]") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 60; ++trial) {
        const SymIntMatrix m = testutil::random_symmetric(rng, 5);
        const IntMatrix e = testutil::random_unimodular(rng, m.size());
        CHECK(parity_type(congruence_apply(m, e)) == parity_type(m));
    }
}

TEST_CASE("classification of unimodular forms", "[intform]") {
    const FormClass d2 = classify_unimodular(SymIntMatrix::diagonal({1, 1}));
    CHECK(d2.kind == FormClass::Kind::DefiniteDiagonal);
    CHECK(d2.sign == 1);
    CHECK(d2.rank == 2);

    const FormClass h = classify_unimodular(SymIntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(h.kind == FormClass::Kind::EvenIndefinite);
    CHECK(h.hyperbolic == 1);
    CHECK(h.e8_blocks == 0);

    const FormClass odd = classify_unimodular(SymIntMatrix::diagonal({1, -1}));
    CHECK(odd.kind == FormClass::Kind::OddIndefinite);
    CHECK(odd.positive == 1);
    CHECK(odd.negative == 1);

    CHECK(classify_unimodular(SymIntMatrix()).kind == FormClass::Kind::ZeroRank);
    CHECK(classify_unimodular(e8_matrix()).kind == FormClass::Kind::Unclassified);

    const SymIntMatrix he8 = SymIntMatrix::from_rows({{0, 1}, {1, 0}}).direct_sum(e8_matrix().negated());
    const FormClass mixed = classify_unimodular(he8);
    CHECK(mixed.kind == FormClass::Kind::EvenIndefinite);
    CHECK(mixed.hyperbolic == 1);
    CHECK(mixed.e8_blocks == -1);

    CHECK_ERROR_NAME(classify_unimodular(SymIntMatrix::diagonal({2})), "NotUnimodular");
    CHECK_ERROR_NAME(classify_unimodular(SymIntMatrix::diagonal({0})), "Degenerate");
}
