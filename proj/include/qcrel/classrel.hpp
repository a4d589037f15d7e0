#pragma once

#include <vector>

#include "qcrel/groupoid.hpp"

namespace qcrel {

// Thrown when an enumeration search space exceeds its cap.
struct cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// true iff R: A -> B preserves set-extended multiplication and maps the
// identity set of A onto the identity set of B, as relation equations
bool is_monoid_hom_rel(const Rel& R, const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B);

// multiplicativity only, no unit condition
bool is_groupoid_hom_rel(const Rel& R, const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B);

// the image of R meets every component of Z_B
bool is_object_surjective(const Rel& R, const AbelianGroupoid& Z_B);

// a classical relation is one whose converse is a monoid homomorphism relation
bool is_classical_relation(const Rel& f, const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B);

// A relation f: A -> B whose converse is a monoid homomorphism Z_B -> Z_A.
struct ClassicalRelation {
    Rel rel;
    AbelianGroupoid source_Z;
    AbelianGroupoid target_Z;
};

// validates and wraps; throws std::invalid_argument when f is not classical
ClassicalRelation make_classical(const Rel& f, const AbelianGroupoid& Z_A,
                                 const AbelianGroupoid& Z_B);

// every subset of A x B passing is_classical_relation, canonically sorted by
// pair list; candidate count is 2^(|A|*|B|) and |A|*|B| must not exceed cap_bits
std::vector<ClassicalRelation> enumerate_classical_relations(const AbelianGroupoid& Z_A,
                                                             const AbelianGroupoid& Z_B,
                                                             int cap_bits = 25,
                                                             bool parallel = true,
                                                             bool unit_pruning = true);

// for every e in B: inv_A(f^-1(inv_B(e))) = f^-1(e), with elementwise inverses
bool is_self_conjugate(const ClassicalRelation& f);

}  // namespace qcrel
