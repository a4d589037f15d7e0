#pragma once

#include <vector>

#include "qcrel/groupoid.hpp"

namespace qcrel {

// Two groupoids on one |H| x |G| grid carrier, index of (h,g) = h*|G| + g.
// Z has one H-component per g; X has one G-component per h. Each Z-component
// meets each X-component in exactly one element, and the classical states of
// either structure are the unbiased states of the other.
// canonical_grid marks pairs whose carrier labeling follows the (h,g) formula;
// transpose_pair keeps carrier indices and clears the flag.
struct ComplementaryPair {
    FiniteAbelianGroup G;
    FiniteAbelianGroup H;
    int carrier;
    AbelianGroupoid Z;
    AbelianGroupoid X;
    bool canonical_grid;
};

ComplementaryPair build_pair(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H);
// swaps the roles of Z and X (and G and H) without relabeling the carrier
ComplementaryPair transpose_pair(const ComplementaryPair& pair);
// the canonical pair whose Z equals the given uniform groupoid: n components
// of group K become transpose_pair(build_pair(K, Z_n)), so X interleaves
ComplementaryPair canonical_pair_for(const AbelianGroupoid& Z);

// {((x,y),(a, b *_X y)) | a *_Z b = x} on carrier^2
Rel cnot_rel(const AbelianGroupoid& target_Z, const AbelianGroupoid& control_X);
Rel cnot_rel(const ComplementaryPair& pair);

// true iff the controlled-not relation is a bijection, tested in both roles
bool check_complementarity(const ComplementaryPair& pair);
bool check_complementarity(const AbelianGroupoid& Z, const AbelianGroupoid& X);

// bialgebra equation plus coherence, evaluated as relation equations in both
// orientations; the bare bialgebra equation alone also holds for Z = X, so
// coherence is load-bearing
bool check_strong_complementarity(const AbelianGroupoid& Z, const AbelianGroupoid& X);
// independent criterion: components of each groupoid pairwise isomorphic and
// every Z-component meets every X-component in a singleton
bool grid_criterion(const AbelianGroupoid& Z, const AbelianGroupoid& X);

// classical states of Z listed against unbiased states of X; the mapping is
// index i -> i and the two state lists agree subsetwise
struct RelFourierMap {
    std::vector<Subset> z_classical;
    std::vector<Subset> x_unbiased;
};
RelFourierMap rel_fourier(const ComplementaryPair& pair);

// the permutation {((h,g),(psi g, psi^-1 h))} for a verified isomorphism
// psi: G -> H; a comonoid homomorphism Z -> X and monoid homomorphism X -> Z
Rel rel_fourier_matrix(const ComplementaryPair& pair, const std::vector<int>& psi);

// (h,g) -> (-h,-g); equals the composite of the two elementwise inverses
Rel antipode_rel(const ComplementaryPair& pair);

// union of |x><x| over classical states equals the identity iff Z is discrete
bool check_resolution_of_identity(const AbelianGroupoid& Z);

// intersection of the two spans (all unions of classical states), sorted
std::vector<Subset> span_intersection(const ComplementaryPair& pair);

}  // namespace qcrel
