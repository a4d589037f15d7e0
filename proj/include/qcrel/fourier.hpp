#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qcrel/groupoid.hpp"

namespace qcrel {

// absolute per-entry tolerance for all numeric comparisons in this module
inline constexpr double kTol = 1e-9;

using Complex = std::complex<double>;

// Dense row-major complex matrix.
struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> a;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Complex& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Complex& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static ComplexMatrix identity(int n);
};

ComplexMatrix matmul(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

// A complex-valued function on a group, indexed by the mixed-radix ranking.
struct GroupFunction {
    FiniteAbelianGroup group;
    std::vector<Complex> values;

    GroupFunction(FiniteAbelianGroup g, std::vector<Complex> v);
    static GroupFunction delta(const FiniteAbelianGroup& g, int at);
    static GroupFunction constant(const FiniteAbelianGroup& g, Complex value);
};

double max_abs_diff(const GroupFunction& lhs, const GroupFunction& rhs);

// chi_h(g) = exp[i sum_j (2 pi / n_j) (g_j h_j mod n_j)].
// Quarter-turn phases are produced exactly, so qubit matrices have entries +-1.
Complex character_value(const FiniteAbelianGroup& G, int h, int g);

// F(chi_h) = (1/N) sum_g chi_h(g)^{-1} f(g), characters indexed by elements.
GroupFunction fourier_transform(const GroupFunction& f);
// f(g) = sum_h chi_h(g) F(chi_h)
GroupFunction inverse_fourier(const GroupFunction& F);

// (f * f')(h) = sum_{g'} f(h - g') f'(g')
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);
GroupFunction pointwise(const GroupFunction& f, const GroupFunction& g);

// Max deviation of the monoid-homomorphism identity U(f * f') = U(f) . U(g)
// for the unnormalized transform U = N . fourier_transform, which sends the
// convolution unit delta_0 to the pointwise unit (the constant-one function).
double convolution_theorem_error(const GroupFunction& f, const GroupFunction& g);

// max over character pairs of |(1/N) sum_g chi^{-1}(g) chi'(g) - delta_{chi chi'}|
double character_orthogonality_check(const FiniteAbelianGroup& G);

// F_{hg} = chi_{psi(h)}(g); psi must be a group automorphism given as an index
// map (throws std::invalid_argument otherwise). The default is the identity.
ComplexMatrix fourier_matrix(const FiniteAbelianGroup& G, const std::vector<int>& psi);
ComplexMatrix fourier_matrix(const FiniteAbelianGroup& G);

// max entrywise deviation of (F/sqrt(N))^dagger (F/sqrt(N)) from the identity
double fourier_matrix_unitarity_error(const ComplexMatrix& F);

// A total map between groups given by its full element-indexed image table.
struct GroupHomTable {
    FiniteAbelianGroup source;
    FiniteAbelianGroup target;
    std::vector<int> image;
};

// image(0) = 0 and image(g + g') = image(g) + image(g'), checked exhaustively
bool is_group_hom(const GroupHomTable& t);

// All homomorphisms G -> A by generator-image assignment, one generator per
// cyclic factor of G. Throws std::length_error when the count exceeds max_tables.
std::vector<GroupHomTable> enumerate_homs(const FiniteAbelianGroup& G,
                                          const FiniteAbelianGroup& A,
                                          std::uint64_t max_tables = 1u << 20);

// Steps the same generator-image odometer without materializing tables.
std::uint64_t count_homs_by_enumeration(const FiniteAbelianGroup& G,
                                        const FiniteAbelianGroup& A);

// Product of p^min(a,b) over same-prime pairs of prime-power factors, after
// splitting every cyclic factor by trial division.
std::uint64_t count_homs_formula(const FiniteAbelianGroup& G, const FiniteAbelianGroup& A);

// (1/|G|) sum_g sigma(f(g)) with sigma the character of A indexed by sigma_index.
// Constant f gives unit magnitude; f balanced w.r.t. sigma gives zero.
Complex dj_amplitude(const GroupHomTable& f, int sigma_index);

// Query-counted access to a hidden homomorphism table.
class QuantumOracle {
public:
    explicit QuantumOracle(GroupHomTable f) : f_(std::move(f)) {}
    const GroupHomTable& query() {
        ++queries_;
        return f_;
    }
    int queries() const { return queries_; }

private:
    GroupHomTable f_;
    int queries_ = 0;
};

struct IdentifyResult {
    GroupHomTable table;
    int query_count = 0;
    // per target factor: |coefficient|^2 against every character of G
    std::vector<std::vector<double>> probabilities;
};

// coefficients of chi against the character basis: c_h = (1/N) sum_g conj(chi_h(g)) chi(g)
std::vector<Complex> character_decomposition(const FiniteAbelianGroup& G,
                                             const std::vector<Complex>& chi);

// Identifies the hidden homomorphism with one query per cyclic factor of A.
// Every factor of A must be a prime power (the factored form is an input).
// Throws std::runtime_error when no unique unit coefficient exists (promise
// violation) and std::invalid_argument on non-prime-power factors.
IdentifyResult grouphomid_identify(const FiniteAbelianGroup& G, const FiniteAbelianGroup& A,
                                   QuantumOracle& oracle);

// Queries a deterministic classical procedure needs: one per cyclic factor of G.
int classical_query_count(const FiniteAbelianGroup& G);

}  // namespace qcrel
