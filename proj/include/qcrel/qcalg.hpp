#pragma once

#include <utility>
#include <vector>

#include "qcrel/classrel.hpp"
#include "qcrel/comp.hpp"
#include "qcrel/groupoid.hpp"
#include "qcrel/rel.hpp"

namespace qcrel {

// Oracle endomorphism on A x B induced by f: A -> B.
// (x, y) -> (a, c *_X y) whenever a *_Z b = x for some b with b f c.
// Always a bijection when f is a classical relation.
struct OracleRel {
    ClassicalRelation f;
    ComplementaryPair pair_A;
    ComplementaryPair pair_B;
    Rel rel;
};

// The oracle formula applied to an arbitrary relation with matching carriers.
Rel oracle_rel_raw(const Rel& f, const AbelianGroupoid& Z_A, const AbelianGroupoid& X_B);

// Throws std::invalid_argument on groupoid mismatch and std::logic_error if the
// result fails the bijection check (cannot happen for classical f).
OracleRel build_oracle(const ClassicalRelation& f, const ComplementaryPair& pair_A,
                       const ComplementaryPair& pair_B);

// One algorithm composite. scalar == zero iff output_state is empty.
struct AlgorithmOutcome {
    Scalar scalar = Scalar::zero;
    Subset output_state;
    Subset pre_measure_state;
    // (classical-state index, possibility) over the measured structure
    std::vector<std::pair<int, bool>> possible_classical_outcomes;
    // search run only: per-state zero-condition values and the cross-check
    // "composite possible implies condition violated"
    std::vector<bool> zero_condition;
    bool diffusion_bijective = true;
    bool implication_ok = true;
    // hom-identification only: full composite equals the simplified form
    bool simplified_agrees = true;
};

// Constant: f equals U_A x c for a single classical state c of Z_B,
// U_A the identity elements of Z_A.
bool is_constant_rel(const Rel& f, const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B);

// Balanced: no element of the first X_A classical state relates to an element
// of the second X_B classical state.
bool is_balanced_rel(const Rel& f, const ComplementaryPair& pair_A,
                     const ComplementaryPair& pair_B);

// <H0_A| x id . Oracle(f) . |H0_A> x |H1_B>, composed literally.
// scalar one iff constant on instances where every classical relation is
// constant or balanced. Requires X_B to have at least two classical states.
AlgorithmOutcome dj_run(const ClassicalRelation& f, const ComplementaryPair& pair_A,
                        const ComplementaryPair& pair_B);

// Over every classical relation Z_A -> Z_B: none is balanced with support
// inside the first X_A classical state, and every constant one has support
// exactly the identity elements of Z_A.
bool check_balanced_preimage_lemma(const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B);

// sym_diff(id, |H0><H0|) with H0 the unit image of pair_S.Z.
// Not a bijection once the carrier has more than two components.
Rel diffusion_rel(const ComplementaryPair& pair_S);

// <X_rho| x id . (D x id) . Oracle(f) . |X_0> x |X_sigma>, swept over rho.
// f may be non-classical; the oracle uses the raw formula.
AlgorithmOutcome grover_run(const Rel& f, const ComplementaryPair& pair_S,
                            const ComplementaryPair& pair_B, int sigma);

// <rho| x id . Oracle(f) . |U_G> x |sigma>, U_G the unit image of pair_G.Z.
// Cross-checked against the simplified form
// born(rho, inv_Z(f-preimage of sigma)) . |sigma>.
AlgorithmOutcome grouphomid_run(const ClassicalRelation& f, const ComplementaryPair& pair_G,
                                const ComplementaryPair& pair_A, int rho, int sigma);

}  // namespace qcrel
