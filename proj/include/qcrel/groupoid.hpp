#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcrel/rel.hpp"

namespace qcrel {

// A finite abelian group presented as a product of cyclic factors.
// Elements are ranked in mixed radix with the leftmost factor most significant.
struct FiniteAbelianGroup {
    std::vector<int> factors;

    explicit FiniteAbelianGroup(std::vector<int> fs);

    int order() const { return order_; }
    std::vector<int> residues(int e) const;
    int rank(const std::vector<int>& residues) const;
    int add(int a, int b) const;
    int neg(int a) const;
    int zero() const { return 0; }
    int scalar_mul(int k, int a) const;  // a added to itself k times
    int element_order(int a) const;

    // multiset of prime-power cyclic factors, sorted; equal multisets <=> isomorphic
    std::vector<int> prime_power_multiset() const;

    bool operator==(const FiniteAbelianGroup& other) const { return factors == other.factors; }

private:
    int order_;
};

// An element named by its component and residue tuple.
struct GroupoidElement {
    int component;
    std::vector<int> residues;
};

// A disjoint union of finite abelian groups with partial multiplication.
// The carrier may be any labeling of [0, carrier_size); each component lists
// its carrier indices in group-rank order. The one-argument constructor lays
// components out contiguously in component-major order.
class AbelianGroupoid {
public:
    struct Component {
        FiniteAbelianGroup group;
        std::vector<int> carrier;  // carrier[k] = flat index of the rank-k element
    };

    explicit AbelianGroupoid(std::vector<FiniteAbelianGroup> component_groups);
    AbelianGroupoid(std::vector<Component> components, int carrier_size);

    int carrier_size() const { return carrier_size_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    const Component& component(int i) const { return components_[i]; }
    int component_of(int x) const { return comp_of_[x]; }
    int rank_in_component(int x) const { return rank_of_[x]; }

    // defined iff x and y lie in the same component
    std::optional<int> mult(int x, int y) const;
    int inverse(int x) const;  // elementwise groupoid inverse, total
    std::vector<int> identity_set() const;
    bool is_identity(int x) const;

    GroupoidElement element(int x) const;
    int flat_index(const GroupoidElement& e) const;

    // all components share one factor sequence
    bool uniform() const;

    bool operator==(const AbelianGroupoid& other) const;

private:
    std::vector<Component> components_;
    int carrier_size_;
    std::vector<int> comp_of_;
    std::vector<int> rank_of_;
};

// the relation (A x A) -> A containing ((x,y), x*y) exactly when defined
Rel mult_rel(const AbelianGroupoid& Z);
// the relation {*} -> A relating the singleton to every component identity
Rel unit_rel(const AbelianGroupoid& Z);

struct LawReport {
    std::vector<std::pair<std::string, bool>> laws;
    bool all_pass() const;
};

// evaluates the classical-structure laws as relation equations
LawReport verify_classical_structure(const AbelianGroupoid& Z);
// same checks against explicit multiplication/unit relations (mutation testing)
LawReport verify_classical_structure_rels(const Rel& mult, const Rel& unit, int carrier);

// one subset per component
std::vector<Subset> classical_states(const AbelianGroupoid& Z);
// one element from each component, by shared rank; requires uniform components
std::vector<Subset> unbiased_states(const AbelianGroupoid& Z);

// a phase picks one element per component; applying it translates componentwise
std::vector<std::vector<int>> phase_group(const AbelianGroupoid& Z);
Subset apply_phase(const AbelianGroupoid& Z, const std::vector<int>& phase, const Subset& s);

// all single-component triples (a,b,c) with a*b*c = identity, on A x A x A
Subset ghz_state(const AbelianGroupoid& Z);

// the full relation on s x s
Rel density_matrix(const Subset& s);

}  // namespace qcrel
