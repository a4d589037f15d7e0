#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcrel/rel.hpp"
#include "qcrel/verify.hpp"

using namespace qcrel;

TEST_CASE("scalars form the boolean semiring under and") {
    CHECK(scalar_and(Scalar::one, Scalar::one) == Scalar::one);
    CHECK(scalar_and(Scalar::one, Scalar::zero) == Scalar::zero);
    CHECK(scalar_and(Scalar::zero, Scalar::one) == Scalar::zero);
    CHECK(scalar_and(Scalar::zero, Scalar::zero) == Scalar::zero);
}

TEST_CASE("subsets track membership and ordering") {
    const Subset s = Subset::from_indices(6, {4, 1});
    CHECK(s.count() == 2);
    CHECK(s.contains(1));
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(0));
    CHECK(s.indices() == std::vector<int>{1, 4});
    CHECK(Subset(6).is_empty());
    CHECK(Subset::full(6).count() == 6);
    CHECK(s.set_union(Subset::from_indices(6, {0})).count() == 3);
    CHECK(s.set_intersection(Subset::from_indices(6, {1, 2})) ==
          Subset::from_indices(6, {1}));
    CHECK(Subset::from_indices(6, {0, 5}) < Subset::from_indices(6, {1}));
}

TEST_CASE("composition follows relational image") {
    const Rel f = Rel::from_pairs(2, 3, {{0, 0}, {0, 1}, {1, 2}});
    const Rel g = Rel::from_pairs(3, 2, {{1, 0}, {2, 1}});
    const Rel gf = compose(g, f);
    CHECK(gf == Rel::from_pairs(2, 2, {{0, 0}, {1, 1}}));
    CHECK(compose(Rel::identity(3), f) == f);
    CHECK(compose(f, Rel::identity(2)) == f);
    CHECK_THROWS_AS(compose(f, f), size_error);
}

TEST_CASE("converse flips pairs and is involutive") {
    const Rel f = Rel::from_pairs(2, 3, {{0, 2}, {1, 0}});
    CHECK(converse(f) == Rel::from_pairs(3, 2, {{2, 0}, {0, 1}}));
    CHECK(converse(converse(f)) == f);
}

TEST_CASE("tensor uses the row-major product index") {
    const Rel f = Rel::from_pairs(2, 2, {{0, 1}});
    const Rel g = Rel::from_pairs(3, 3, {{2, 0}});
    const Rel t = tensor(f, g);
    CHECK(t.dom_size() == 6);
    CHECK(t.cod_size() == 6);
    // (0,2) -> (1,0): index 0*3+2 = 2 maps to 1*3+0 = 3
    CHECK(t.pairs() == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("image and preimage scan the incidence matrix") {
    const Rel f = Rel::from_pairs(3, 3, {{0, 1}, {1, 1}, {2, 0}});
    CHECK(f.image(Subset::from_indices(3, {0, 1})) == Subset::from_indices(3, {1}));
    CHECK(f.preimage(Subset::from_indices(3, {1})) == Subset::from_indices(3, {0, 1}));
    CHECK(f.pair_count() == 3);
}

TEST_CASE("born pairing is subset intersection") {
    const Subset a = Subset::from_indices(4, {0, 2});
    const Subset b = Subset::from_indices(4, {1, 2});
    const Subset c = Subset::from_indices(4, {1, 3});
    CHECK(born_scalar(a, b) == Scalar::one);
    CHECK(born_scalar(a, c) == Scalar::zero);
    const Rel pairing = compose(effect_rel(a), state_rel(b));
    CHECK(pairing.dom_size() == 1);
    CHECK(pairing.cod_size() == 1);
    CHECK(pairing.at(0, 0));
}

TEST_CASE("bijection checks recognize permutations only") {
    CHECK(is_bijection(swap_rel(2, 3)));
    CHECK(is_bijection(Rel::identity(5)));
    CHECK_FALSE(is_bijection(Rel::full(2, 2)));
    CHECK_FALSE(is_bijection(Rel::from_pairs(2, 2, {{0, 0}})));
    CHECK_FALSE(is_bijection(Rel::from_pairs(2, 2, {{0, 0}, {1, 0}})));
}

TEST_CASE("printing uses canonical pair order") {
    CHECK(to_string(Rel::identity(2)) == "{(0,0),(1,1)}");
    CHECK(to_string(Rel::empty(2, 2)) == "{}");
    CHECK(to_string(Subset::from_indices(4, {3, 1})) == "{1,3}");
    CHECK(to_string(Subset(4)) == "{}");
}

TEST_CASE("union and symmetric difference act pointwise") {
    const Rel a = Rel::from_pairs(2, 2, {{0, 0}, {1, 1}});
    const Rel b = Rel::from_pairs(2, 2, {{0, 0}, {0, 1}});
    CHECK(union_rel(a, b) == Rel::from_pairs(2, 2, {{0, 0}, {0, 1}, {1, 1}}));
    CHECK(sym_diff(a, b) == Rel::from_pairs(2, 2, {{0, 1}, {1, 1}}));
}

TEST_CASE("relation invariant suite passes") {
    const SuiteResult suite = run_suite_rel();
    for (const auto& check : suite.checks) CHECK_MESSAGE(check.passed, check.name);
}
