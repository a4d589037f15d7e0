#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcrel/comp.hpp"
#include "qcrel/groupoid.hpp"
#include "qcrel/rel.hpp"
#include "qcrel/verify.hpp"

using namespace qcrel;

namespace {
const FiniteAbelianGroup z2({2}), z3({3}), z4({4}), z2z2g({2, 2});
}

TEST_CASE("grid pairs place one basis contiguously and one interleaved") {
    const ComplementaryPair p = build_pair(z2, z3);
    CHECK(p.carrier == 6);
    // first basis: 2 components of size 3, stepping by |G|
    REQUIRE(p.Z.component_count() == 2);
    CHECK(classical_states(p.Z)[0] == Subset::from_indices(6, {0, 2, 4}));
    CHECK(classical_states(p.Z)[1] == Subset::from_indices(6, {1, 3, 5}));
    // second basis: 3 components of size 2, contiguous
    REQUIRE(p.X.component_count() == 3);
    CHECK(classical_states(p.X)[0] == Subset::from_indices(6, {0, 1}));
    CHECK(classical_states(p.X)[2] == Subset::from_indices(6, {4, 5}));
}

TEST_CASE("the canonical pair for a uniform groupoid fixes the original labels") {
    const AbelianGroupoid Z({z2, z2});
    const ComplementaryPair p = canonical_pair_for(Z);
    CHECK(p.Z == Z);
    CHECK(classical_states(p.X)[0] == Subset::from_indices(4, {0, 2}));
    CHECK(classical_states(p.X)[1] == Subset::from_indices(4, {1, 3}));
    // the first measurement outcome is the identity-element block
    CHECK(classical_states(p.X)[0] ==
          Subset::from_indices(4, Z.identity_set()));
}

TEST_CASE("grid pairs are strongly complementary") {
    for (const auto& G : {z2, z3, z4, z2z2g})
        for (const auto& H : {z2, z3, z4, z2z2g}) {
            const ComplementaryPair p = build_pair(G, H);
            CHECK(check_complementarity(p));
            CHECK(check_strong_complementarity(p.Z, p.X));
            CHECK(grid_criterion(p.Z, p.X));
            CHECK(is_bijection(cnot_rel(p)));
        }
}

TEST_CASE("a basis is not complementary to itself") {
    const AbelianGroupoid Z({z2, z2});
    CHECK_FALSE(check_complementarity(Z, Z));
    CHECK_FALSE(is_bijection(cnot_rel(Z, Z)));
    CHECK_FALSE(check_strong_complementarity(Z, Z));
    CHECK_FALSE(grid_criterion(Z, Z));
}

TEST_CASE("transposing swaps the two bases and keeps complementarity") {
    const ComplementaryPair p = build_pair(z3, z4);
    const ComplementaryPair t = transpose_pair(p);
    CHECK(t.Z == p.X);
    CHECK(t.X == p.Z);
    CHECK_FALSE(t.canonical_grid);
    CHECK(check_complementarity(t));
}

TEST_CASE("classical states of one basis are the unbiased states of the other") {
    const ComplementaryPair p = build_pair(z2z2g, z3);
    const RelFourierMap m = rel_fourier(p);
    REQUIRE(m.z_classical.size() == m.x_unbiased.size());
    for (std::size_t i = 0; i < m.z_classical.size(); ++i)
        CHECK(m.z_classical[i] == m.x_unbiased[i]);
}

TEST_CASE("the grid transpose is a structure preserving bijection") {
    for (const auto& G : {z2, z3, z4, z2z2g}) {
        const ComplementaryPair p = build_pair(G, G);
        std::vector<int> psi(G.order());
        for (int i = 0; i < G.order(); ++i) psi[i] = i;
        CHECK(is_bijection(rel_fourier_matrix(p, psi)));
    }
}

TEST_CASE("the antipode squares to the identity") {
    for (const auto& G : {z2, z3, z4, z2z2g}) {
        const ComplementaryPair p = build_pair(G, z3);
        const Rel s = antipode_rel(p);
        CHECK(is_bijection(s));
        CHECK(compose(s, s) == Rel::identity(p.carrier));
    }
}

TEST_CASE("resolution of the identity needs discrete components") {
    const FiniteAbelianGroup z1({1});
    CHECK(check_resolution_of_identity(AbelianGroupoid({z1, z1, z1})));
    CHECK_FALSE(check_resolution_of_identity(AbelianGroupoid({z2})));
    CHECK_FALSE(check_resolution_of_identity(AbelianGroupoid({z1, z2})));
}

TEST_CASE("the two basis spans intersect trivially") {
    const auto spans = span_intersection(build_pair(z2, z2));
    REQUIRE(spans.size() == 2);
    CHECK(spans[0] == Subset(4));
    CHECK(spans[1] == Subset::full(4));
}

TEST_CASE("complementarity invariant suite passes") {
    const SuiteResult suite = run_suite_comp();
    for (const auto& check : suite.checks) CHECK_MESSAGE(check.passed, check.name);
}
