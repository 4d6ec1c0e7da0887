#include <doctest.h>

#include <random>
#include <stdexcept>

#include "detmax/cocycle.hpp"
#include "detmax/exact_linalg.hpp"
#include "detmax/skew.hpp"
#include "oracles.hpp"

using namespace detmax;
using namespace detmax::testing;

namespace {

SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    const int n = static_cast<int>(rows.size());
    SignMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m.set(i, j++, static_cast<int8_t>(v));
        ++i;
    }
    return m;
}

void check_witness_sound(const SignMatrix& m, const SkewWitness& w) {
    const int n = m.order();
    REQUIRE(is_skew_type(w.k));
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        const auto [src, sign] = w.row_source[i];
        REQUIRE(!seen[src]);
        seen[src] = true;
        for (int j = 0; j < n; ++j) CHECK(w.k(i, j) == sign * m(src, j));
    }
    CHECK(abs(determinant_exact(w.k)) == abs(determinant_exact(m)));
}

}  // namespace

TEST_CASE("2x2 witness with a negated first row") {
    const SignMatrix m = from_rows({{-1, 1}, {1, 1}});
    const auto res = find_skew_equivalent(m);
    REQUIRE(res.status == SkewStatus::found);
    CHECK(res.witness->k == from_rows({{1, -1}, {1, 1}}));
    CHECK(res.witness->row_source ==
          std::vector<std::pair<int, int8_t>>{{0, -1}, {1, 1}});
    check_witness_sound(m, *res.witness);

    // the pinned-first-row variant reaches the same witness here
    SkewSearchOptions pin;
    pin.fix_first_row = true;
    const auto pinned = find_skew_equivalent(m, pin);
    REQUIRE(pinned.status == SkewStatus::found);
    CHECK(pinned.witness->k == res.witness->k);
}

TEST_CASE("order 1") {
    const auto pos = find_skew_equivalent(SignMatrix(1));
    REQUIRE(pos.status == SkewStatus::found);
    CHECK(pos.witness->k == SignMatrix(1));
    const auto neg = find_skew_equivalent(SignMatrix(1, -1));
    REQUIRE(neg.status == SkewStatus::found);
    CHECK(neg.witness->k == SignMatrix(1));
}

TEST_CASE("a skew-type input is its own witness") {
    const SignMatrix k = triangular_skew(5);
    const auto res = find_skew_equivalent(k);
    REQUIRE(res.status == SkewStatus::found);
    CHECK(res.witness->k == k);
    CHECK(*brute_force_skew_equiv(k) == k);  // identity row op tried first
}

TEST_CASE("agreement with the brute-force oracle") {
    std::mt19937_64 rng(20240609);
    SUBCASE("random 5x5 matrices") {
        for (int trial = 0; trial < 100; ++trial) {
            const SignMatrix m = random_sign_matrix(rng, 5);
            const auto fast = find_skew_equivalent(m);
            const auto slow = brute_force_skew_equiv(m);
            CHECK((fast.status == SkewStatus::found) == slow.has_value());
            if (fast.status == SkewStatus::found) check_witness_sound(m, *fast.witness);
        }
    }
    SUBCASE("all 16 assembled selections at t=3") {
        const GroupTable g(3);
        const CocycleBasis basis(g);
        for (uint64_t mask = 0; mask < 16; ++mask) {
            const SignMatrix m = basis.assemble(mask);
            const auto fast = find_skew_equivalent(m);
            const auto slow = brute_force_skew_equiv(m);
            CHECK((fast.status == SkewStatus::found) == slow.has_value());
        }
    }
}

TEST_CASE("class invariant survives monomial scrambling") {
    std::mt19937_64 rng(20240610);
    for (int n : {6, 10}) {
        const SignMatrix k = triangular_skew(n);
        const BigInt inv = skew_class_invariant(k);
        for (int trial = 0; trial < 20; ++trial) {
            const auto p = random_monomial(rng, n);
            const auto q = random_monomial(rng, n);
            const SignMatrix scrambled = apply_monomial(p, k, q);
            const auto res = find_skew_equivalent(scrambled);
            REQUIRE(res.status == SkewStatus::found);
            check_witness_sound(scrambled, *res.witness);
            CHECK(skew_class_invariant(res.witness->k) == inv);
        }
    }
}

TEST_CASE("identical inputs give identical witnesses") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 20; ++trial) {
        const SignMatrix m = random_sign_matrix(rng, 6);
        const auto a = find_skew_equivalent(m);
        const auto b = find_skew_equivalent(m);
        CHECK(a.status == b.status);
        CHECK(a.nodes == b.nodes);
        if (a.witness) {
            CHECK(a.witness->k == b.witness->k);
            CHECK(a.witness->row_source == b.witness->row_source);
        }
    }
}

TEST_CASE("node budget reports undecided") {
    // order-10 matrix that is skew-equivalent; one trial is never enough
    const SignMatrix k = triangular_skew(10);
    MonomialTransform p = MonomialTransform::identity(10);
    p.signs[0] = -1;
    const SignMatrix m = apply_monomial(p, k, MonomialTransform::identity(10));
    SkewSearchOptions tight;
    tight.node_budget = 1;
    const auto res = find_skew_equivalent(m, tight);
    CHECK(res.status == SkewStatus::undecided);
    CHECK_FALSE(res.witness.has_value());

    SkewSearchOptions loose;
    loose.node_budget = 1u << 20;
    CHECK(find_skew_equivalent(m, loose).status == SkewStatus::found);
}

TEST_CASE("skew_class_invariant") {
    CHECK(skew_class_invariant(from_rows({{1, 1}, {-1, 1}})) == 1);
    CHECK_THROWS_AS(skew_class_invariant(from_rows({{1, 1}, {1, 1}})), std::invalid_argument);
    // det(K - I) of an even-order skew-type matrix is a square (Pfaffian)
    CHECK(skew_class_invariant(triangular_skew(6)) >= 0);
}

TEST_CASE("brute force rejects large orders") {
    CHECK_THROWS_AS(brute_force_skew_equiv(SignMatrix(7)), std::invalid_argument);
}
