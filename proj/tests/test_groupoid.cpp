#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcrel/groupoid.hpp"
#include "qcrel/rel.hpp"
#include "qcrel/verify.hpp"

using namespace qcrel;

TEST_CASE("finite abelian groups compute componentwise arithmetic") {
    const FiniteAbelianGroup g({2, 4});
    CHECK(g.order() == 8);
    CHECK(g.residues(7) == std::vector<int>{1, 3});
    CHECK(g.rank({1, 3}) == 7);
    CHECK(g.add(7, 5) == g.rank({0, 0}));
    CHECK(g.neg(7) == g.rank({1, 1}));
    CHECK(g.zero() == 0);
    CHECK(g.element_order(4) == 2);
    CHECK(g.element_order(1) == 4);
    CHECK(g.scalar_mul(3, 7) == g.add(7, g.add(7, 7)));
}

TEST_CASE("prime power content is presentation independent") {
    const FiniteAbelianGroup z6({6});
    const FiniteAbelianGroup z2z3({2, 3});
    CHECK(z6.prime_power_multiset() == z2z3.prime_power_multiset());
    CHECK(FiniteAbelianGroup({4}).prime_power_multiset() !=
          FiniteAbelianGroup({2, 2}).prime_power_multiset());
}

TEST_CASE("groupoid multiplication is defined exactly within components") {
    const AbelianGroupoid Z({FiniteAbelianGroup({2}), FiniteAbelianGroup({2})});
    CHECK(Z.carrier_size() == 4);
    CHECK(Z.component_count() == 2);
    CHECK(Z.component_of(1) == 0);
    CHECK(Z.component_of(2) == 1);
    CHECK(Z.mult(0, 1) == 1);
    CHECK(Z.mult(1, 1) == 0);
    CHECK_FALSE(Z.mult(1, 2).has_value());
    CHECK(Z.inverse(3) == 3);
    CHECK(Z.identity_set() == std::vector<int>{0, 2});
    CHECK(Z.is_identity(2));
    CHECK_FALSE(Z.is_identity(1));
    CHECK(Z.uniform());
}

TEST_CASE("the eight structure laws hold for a mixed groupoid") {
    const AbelianGroupoid Z(
        {FiniteAbelianGroup({3}), FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({1})});
    const LawReport report = verify_classical_structure(Z);
    CHECK(report.laws.size() == 8);
    for (const auto& [name, ok] : report.laws) CHECK_MESSAGE(ok, name);
    CHECK(report.all_pass());
}

TEST_CASE("a corrupted multiplication violates the laws") {
    const AbelianGroupoid Z({FiniteAbelianGroup({2}), FiniteAbelianGroup({2})});
    const Rel mutated = sym_diff(mult_rel(Z), Rel::from_pairs(16, 4, {{5, 0}}));
    CHECK_FALSE(verify_classical_structure_rels(mutated, unit_rel(Z), 4).all_pass());
}

TEST_CASE("classical and unbiased states of the two-component groupoid") {
    const AbelianGroupoid Z({FiniteAbelianGroup({2}), FiniteAbelianGroup({2})});
    const auto classical = classical_states(Z);
    REQUIRE(classical.size() == 2);
    CHECK(classical[0] == Subset::from_indices(4, {0, 1}));
    CHECK(classical[1] == Subset::from_indices(4, {2, 3}));
    const auto unbiased = unbiased_states(Z);
    REQUIRE(unbiased.size() == 2);
    CHECK(unbiased[0] == Subset::from_indices(4, {0, 2}));
    CHECK(unbiased[1] == Subset::from_indices(4, {1, 3}));
}

TEST_CASE("unbiased states need a uniform groupoid") {
    const AbelianGroupoid Z({FiniteAbelianGroup({2}), FiniteAbelianGroup({3})});
    CHECK_THROWS_AS(unbiased_states(Z), std::invalid_argument);
}

TEST_CASE("phases pick one element per component and act bijectively") {
    const AbelianGroupoid Z({FiniteAbelianGroup({2}), FiniteAbelianGroup({3})});
    const auto phases = phase_group(Z);
    CHECK(phases.size() == 6);
    for (const auto& phase : phases) {
        const Subset moved = apply_phase(Z, phase, Subset::full(5));
        CHECK(moved == Subset::full(5));
    }
}

TEST_CASE("unit related constructions") {
    const AbelianGroupoid Z({FiniteAbelianGroup({2}), FiniteAbelianGroup({2})});
    CHECK(mult_rel(Z).dom_size() == 16);
    CHECK(mult_rel(Z).cod_size() == 4);
    CHECK(unit_rel(Z) == Rel::from_pairs(1, 4, {{0, 0}, {0, 2}}));
    CHECK(ghz_state(Z).parent_size() == 64);
    // triple (a,b,(a+b)^-1) per component: 2 components of 4 triples each
    CHECK(ghz_state(Z).count() == 8);
    const Subset s = Subset::from_indices(4, {0, 2});
    CHECK(density_matrix(s) ==
          Rel::from_pairs(4, 4, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
}

TEST_CASE("groupoid invariant suite passes and the mutation fixture fails") {
    const SuiteResult suite = run_suite_groupoid(false);
    for (const auto& check : suite.checks) CHECK_MESSAGE(check.passed, check.name);
    const SuiteResult injected = run_suite_groupoid(true);
    CHECK_FALSE(injected.all_passed());
}
