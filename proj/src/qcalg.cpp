#include "qcrel/qcalg.hpp"

#include <stdexcept>

namespace qcrel {

namespace {

Subset subset_of(const std::vector<int>& idx, int parent) {
    return Subset::from_indices(parent, idx);
}

bool is_subset(const Subset& a, const Subset& b) {
    return a.set_intersection(b).count() == a.count();
}

// |s> x |t> as a state of the product system
Rel product_state(const Subset& s, const Subset& t) {
    return tensor(state_rel(s), state_rel(t));
}

// <s| x id on the product system
Rel left_effect(const Subset& s, int right_size) {
    return tensor(effect_rel(s), Rel::identity(right_size));
}

}  // namespace

Rel oracle_rel_raw(const Rel& f, const AbelianGroupoid& Z_A, const AbelianGroupoid& X_B) {
    const int nA = Z_A.carrier_size();
    const int nB = X_B.carrier_size();
    if (f.dom_size() != nA || f.cod_size() != nB)
        throw std::invalid_argument("oracle: relation does not match the carriers");
    std::vector<std::pair<int, int>> entries;
    for (int a = 0; a < nA; ++a) {
        for (int b = 0; b < nA; ++b) {
            auto x = Z_A.mult(a, b);
            if (!x) continue;
            for (int c = 0; c < nB; ++c) {
                if (!f.at(b, c)) continue;
                for (int y = 0; y < nB; ++y) {
                    auto z = X_B.mult(c, y);
                    if (!z) continue;
                    entries.emplace_back(*x * nB + y, a * nB + *z);
                }
            }
        }
    }
    return Rel::from_pairs(nA * nB, nA * nB, entries);
}

OracleRel build_oracle(const ClassicalRelation& f, const ComplementaryPair& pair_A,
                       const ComplementaryPair& pair_B) {
    if (!(f.source_Z == pair_A.Z) || !(f.target_Z == pair_B.Z))
        throw std::invalid_argument("oracle: classical relation groupoids do not match the pairs");
    Rel rel = oracle_rel_raw(f.rel, pair_A.Z, pair_B.X);
    if (!is_bijection(rel))
        throw std::logic_error("oracle: classical relation produced a non-bijective oracle");
    return OracleRel{f, pair_A, pair_B, rel};
}

bool is_constant_rel(const Rel& f, const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B) {
    const int nA = Z_A.carrier_size();
    const int nB = Z_B.carrier_size();
    if (f.dom_size() != nA || f.cod_size() != nB)
        throw std::invalid_argument("constant check: relation does not match the carriers");
    const Subset units = subset_of(Z_A.identity_set(), nA);
    for (const Subset& c : classical_states(Z_B)) {
        std::vector<std::pair<int, int>> pairs;
        for (int a : units.indices())
            for (int b : c.indices()) pairs.emplace_back(a, b);
        if (f == Rel::from_pairs(nA, nB, pairs)) return true;
    }
    return false;
}

bool is_balanced_rel(const Rel& f, const ComplementaryPair& pair_A,
                     const ComplementaryPair& pair_B) {
    const auto states_A = classical_states(pair_A.X);
    const auto states_B = classical_states(pair_B.X);
    if (states_B.size() < 2)
        throw std::invalid_argument("balanced check: target X structure needs two classical states");
    if (f.dom_size() != pair_A.carrier || f.cod_size() != pair_B.carrier)
        throw std::invalid_argument("balanced check: relation does not match the carriers");
    for (int a : states_A[0].indices())
        for (int z : states_B[1].indices())
            if (f.at(a, z)) return false;
    return true;
}

AlgorithmOutcome dj_run(const ClassicalRelation& f, const ComplementaryPair& pair_A,
                        const ComplementaryPair& pair_B) {
    const auto states_B = classical_states(pair_B.X);
    if (states_B.size() < 2)
        throw std::invalid_argument("distinguishing run: target X structure needs two classical states");
    const OracleRel oracle = build_oracle(f, pair_A, pair_B);
    const Subset h0 = classical_states(pair_A.X)[0];
    const Subset h1 = states_B[1];
    const int nB = pair_B.carrier;

    const Rel prepared = compose(oracle.rel, product_state(h0, h1));
    const Rel composite = compose(left_effect(h0, nB), prepared);

    AlgorithmOutcome out;
    out.pre_measure_state = prepared.image(Subset::full(1));
    out.output_state = composite.image(Subset::full(1));
    out.scalar = out.output_state.is_empty() ? Scalar::zero : Scalar::one;
    for (std::size_t i = 0; i < states_B.size(); ++i)
        out.possible_classical_outcomes.emplace_back(static_cast<int>(i),
                                                     out.output_state.intersects(states_B[i]));
    return out;
}

bool check_balanced_preimage_lemma(const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B) {
    const ComplementaryPair pair_A = canonical_pair_for(Z_A);
    const ComplementaryPair pair_B = canonical_pair_for(Z_B);
    const Subset x0 = classical_states(pair_A.X)[0];
    const Subset units = subset_of(Z_A.identity_set(), Z_A.carrier_size());
    for (const ClassicalRelation& f : enumerate_classical_relations(Z_A, Z_B)) {
        const Subset support = f.rel.preimage(Subset::full(Z_B.carrier_size()));
        if (is_balanced_rel(f.rel, pair_A, pair_B) && is_subset(support, x0)) return false;
        if (is_constant_rel(f.rel, Z_A, Z_B) && !(support == units)) return false;
    }
    return true;
}

Rel diffusion_rel(const ComplementaryPair& pair_S) {
    const Subset h0 = subset_of(pair_S.Z.identity_set(), pair_S.carrier);
    return sym_diff(Rel::identity(pair_S.carrier), density_matrix(h0));
}

AlgorithmOutcome grover_run(const Rel& f, const ComplementaryPair& pair_S,
                            const ComplementaryPair& pair_B, int sigma) {
    const auto states_S = classical_states(pair_S.X);
    const auto states_B = classical_states(pair_B.X);
    if (sigma < 0 || sigma >= static_cast<int>(states_B.size()))
        throw std::invalid_argument("search run: no such classical state of the target structure");
    const int nS = pair_S.carrier;
    const int nB = pair_B.carrier;
    if (f.dom_size() != nS || f.cod_size() != nB)
        throw std::invalid_argument("search run: relation does not match the carriers");

    const Rel diffusion = diffusion_rel(pair_S);
    const Rel oracle = oracle_rel_raw(f, pair_S.Z, pair_B.X);
    const Subset sig = states_B[sigma];

    const Rel prepared = compose(tensor(diffusion, Rel::identity(nB)),
                                 compose(oracle, product_state(states_S[0], sig)));

    AlgorithmOutcome out;
    out.diffusion_bijective = is_bijection(diffusion);
    out.pre_measure_state = prepared.image(Subset::full(1));
    out.output_state = Subset(nS);
    const Scalar rhs = born_scalar(sig, f.image(states_S[0]));
    for (std::size_t r = 0; r < states_S.size(); ++r) {
        // a state is a possible outcome exactly when it fails the agreement
        // rule against the start state; the composed relation only corroborates
        // this for inputs whose unit block avoids sigma, which the cross-check
        // flag records
        const bool condition = born_scalar(sig, f.image(states_S[r])) == rhs;
        out.possible_classical_outcomes.emplace_back(static_cast<int>(r), !condition);
        if (!condition) out.output_state = out.output_state.set_union(states_S[r]);
        out.zero_condition.push_back(condition);
        const Rel measured = compose(left_effect(states_S[r], nB), prepared);
        if (measured.pair_count() > 0 && condition) out.implication_ok = false;
    }
    out.scalar = out.output_state.is_empty() ? Scalar::zero : Scalar::one;
    return out;
}

AlgorithmOutcome grouphomid_run(const ClassicalRelation& f, const ComplementaryPair& pair_G,
                                const ComplementaryPair& pair_A, int rho, int sigma) {
    const auto states_H = classical_states(pair_G.X);
    const auto states_B = classical_states(pair_A.X);
    if (rho < 0 || rho >= static_cast<int>(states_H.size()) || sigma < 0 ||
        sigma >= static_cast<int>(states_B.size()))
        throw std::invalid_argument("hom identification: no such classical state");
    const OracleRel oracle = build_oracle(f, pair_G, pair_A);
    const int nG = pair_G.carrier;
    const int nA = pair_A.carrier;
    const Subset units = subset_of(pair_G.Z.identity_set(), nG);
    const Subset sig = states_B[sigma];

    const Rel prepared = compose(oracle.rel, product_state(units, sig));
    const Rel composite = compose(left_effect(states_H[rho], nA), prepared);

    // b f c with c in sigma and b = inv_Z(a): the witnesses a form inv_Z(f-preimage)
    const Subset pre = f.rel.preimage(sig);
    std::vector<int> inv_idx;
    for (int b : pre.indices()) inv_idx.push_back(pair_G.Z.inverse(b));
    const Subset witnesses = subset_of(inv_idx, nG);

    AlgorithmOutcome out;
    out.pre_measure_state = prepared.image(Subset::full(1));
    out.output_state = composite.image(Subset::full(1));
    out.scalar = out.output_state.is_empty() ? Scalar::zero : Scalar::one;
    const Rel simplified = born_scalar(states_H[rho], witnesses) == Scalar::one
                               ? state_rel(sig)
                               : Rel::empty(1, nA);
    out.simplified_agrees = composite == simplified;
    for (std::size_t r = 0; r < states_H.size(); ++r)
        out.possible_classical_outcomes.emplace_back(static_cast<int>(r),
                                                     states_H[r].intersects(witnesses));
    return out;
}

}  // namespace qcrel
