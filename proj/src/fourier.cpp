#include "qcrel/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qcrel {

namespace {

// prime-power split of one cyclic order by trial division
std::vector<std::pair<long long, int>> prime_power_split(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::pair<long long, int>> split_all_factors(const FiniteAbelianGroup& G) {
    std::vector<std::pair<long long, int>> out;
    for (int n : G.factors)
        for (auto pe : prime_power_split(n)) out.push_back(pe);
    return out;
}

// annihilator candidates for a generator of order dividing n
std::vector<int> generator_images(const FiniteAbelianGroup& A, int n) {
    std::vector<int> out;
    for (int t = 0; t < A.order(); ++t)
        if (A.scalar_mul(n, t) == A.zero()) out.push_back(t);
    return out;
}

GroupHomTable table_from_images(const FiniteAbelianGroup& G, const FiniteAbelianGroup& A,
                                const std::vector<int>& images) {
    std::vector<int> image(G.order());
    for (int g = 0; g < G.order(); ++g) {
        const auto gr = G.residues(g);
        int acc = A.zero();
        for (std::size_t j = 0; j < images.size(); ++j)
            acc = A.add(acc, A.scalar_mul(gr[j], images[j]));
        image[g] = acc;
    }
    return GroupHomTable{G, A, image};
}

void require_same_group(const GroupFunction& f, const GroupFunction& g) {
    if (!(f.group == g.group)) throw std::invalid_argument("group function: group mismatch");
}

// unnormalized transform: U(f)(chi_h) = sum_g chi_h^{-1}(g) f(g)
std::vector<Complex> unnormalized_transform(const GroupFunction& f) {
    const int n = f.group.order();
    std::vector<Complex> out(n);
    for (int h = 0; h < n; ++h) {
        Complex acc = 0.0;
        for (int g = 0; g < n; ++g)
            acc += std::conj(character_value(f.group, h, g)) * f.values[g];
        out[h] = acc;
    }
    return out;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols != rhs.rows) throw std::invalid_argument("matmul: dimension mismatch");
    ComplexMatrix out(lhs.rows, rhs.cols);
    for (int i = 0; i < lhs.rows; ++i)
        for (int k = 0; k < lhs.cols; ++k) {
            const Complex v = lhs.at(i, k);
            if (v == Complex{}) continue;
            for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = std::conj(m.at(i, j));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    ComplexMatrix out(lhs.rows * rhs.rows, lhs.cols * rhs.cols);
    for (int i = 0; i < lhs.rows; ++i)
        for (int j = 0; j < lhs.cols; ++j)
            for (int k = 0; k < rhs.rows; ++k)
                for (int l = 0; l < rhs.cols; ++l)
                    out.at(i * rhs.rows + k, j * rhs.cols + l) = lhs.at(i, j) * rhs.at(k, l);
    return out;
}

double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.rows != rhs.rows || lhs.cols != rhs.cols)
        throw std::invalid_argument("matrix comparison: dimension mismatch");
    double err = 0.0;
    for (std::size_t i = 0; i < lhs.a.size(); ++i)
        err = std::max(err, std::abs(lhs.a[i] - rhs.a[i]));
    return err;
}

GroupFunction::GroupFunction(FiniteAbelianGroup g, std::vector<Complex> v)
    : group(std::move(g)), values(std::move(v)) {
    if (static_cast<int>(values.size()) != group.order())
        throw std::invalid_argument("group function: wrong number of values");
}

GroupFunction GroupFunction::delta(const FiniteAbelianGroup& g, int at) {
    std::vector<Complex> v(g.order());
    v.at(at) = 1.0;
    return GroupFunction(g, std::move(v));
}

GroupFunction GroupFunction::constant(const FiniteAbelianGroup& g, Complex value) {
    return GroupFunction(g, std::vector<Complex>(g.order(), value));
}

double max_abs_diff(const GroupFunction& lhs, const GroupFunction& rhs) {
    require_same_group(lhs, rhs);
    double err = 0.0;
    for (std::size_t i = 0; i < lhs.values.size(); ++i)
        err = std::max(err, std::abs(lhs.values[i] - rhs.values[i]));
    return err;
}

Complex character_value(const FiniteAbelianGroup& G, int h, int g) {
    const auto hr = G.residues(h);
    const auto gr = G.residues(g);
    // phase accumulated as a reduced fraction of a full turn
    long long num = 0;
    long long den = 1;
    for (std::size_t j = 0; j < G.factors.size(); ++j) {
        const long long nj = G.factors[j];
        const long long term = (static_cast<long long>(gr[j]) * hr[j]) % nj;
        num = num * nj + term * den;
        den *= nj;
        const long long d = std::gcd(num, den);
        if (d > 1) {
            num /= d;
            den /= d;
        }
    }
    num %= den;
    if ((4 * num) % den == 0) {
        switch (((4 * num) / den) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                               static_cast<double>(den));
}

GroupFunction fourier_transform(const GroupFunction& f) {
    const int n = f.group.order();
    std::vector<Complex> out = unnormalized_transform(f);
    for (Complex& v : out) v /= static_cast<double>(n);
    return GroupFunction(f.group, std::move(out));
}

GroupFunction inverse_fourier(const GroupFunction& F) {
    const int n = F.group.order();
    std::vector<Complex> out(n);
    for (int g = 0; g < n; ++g) {
        Complex acc = 0.0;
        for (int h = 0; h < n; ++h) acc += character_value(F.group, h, g) * F.values[h];
        out[g] = acc;
    }
    return GroupFunction(F.group, std::move(out));
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
    require_same_group(f, g);
    const int n = f.group.order();
    std::vector<Complex> out(n);
    for (int h = 0; h < n; ++h) {
        Complex acc = 0.0;
        for (int gp = 0; gp < n; ++gp)
            acc += f.values[f.group.add(h, f.group.neg(gp))] * g.values[gp];
        out[h] = acc;
    }
    return GroupFunction(f.group, std::move(out));
}

GroupFunction pointwise(const GroupFunction& f, const GroupFunction& g) {
    require_same_group(f, g);
    std::vector<Complex> out(f.values.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.values[i] * g.values[i];
    return GroupFunction(f.group, std::move(out));
}

double convolution_theorem_error(const GroupFunction& f, const GroupFunction& g) {
    require_same_group(f, g);
    const auto uf = unnormalized_transform(f);
    const auto ug = unnormalized_transform(g);
    const auto uc = unnormalized_transform(convolve(f, g));
    double err = 0.0;
    for (std::size_t h = 0; h < uc.size(); ++h)
        err = std::max(err, std::abs(uc[h] - uf[h] * ug[h]));
    return err;
}

double character_orthogonality_check(const FiniteAbelianGroup& G) {
    const int n = G.order();
    double err = 0.0;
    for (int h = 0; h < n; ++h)
        for (int hp = 0; hp < n; ++hp) {
            Complex acc = 0.0;
            for (int g = 0; g < n; ++g)
                acc += std::conj(character_value(G, h, g)) * character_value(G, hp, g);
            acc /= static_cast<double>(n);
            const Complex target = (h == hp) ? Complex{1.0, 0.0} : Complex{};
            err = std::max(err, std::abs(acc - target));
        }
    return err;
}

ComplexMatrix fourier_matrix(const FiniteAbelianGroup& G, const std::vector<int>& psi) {
    const int n = G.order();
    if (static_cast<int>(psi.size()) != n)
        throw std::invalid_argument("fourier matrix: index map has the wrong size");
    std::vector<bool> seen(n, false);
    for (int v : psi) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("fourier matrix: index map is not a bijection");
        seen[v] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (psi[G.add(a, b)] != G.add(psi[a], psi[b]))
                throw std::invalid_argument("fourier matrix: index map is not a homomorphism");
    ComplexMatrix F(n, n);
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) F.at(h, g) = character_value(G, psi[h], g);
    return F;
}

ComplexMatrix fourier_matrix(const FiniteAbelianGroup& G) {
    std::vector<int> psi(G.order());
    for (int i = 0; i < G.order(); ++i) psi[i] = i;
    return fourier_matrix(G, psi);
}

double fourier_matrix_unitarity_error(const ComplexMatrix& F) {
    if (F.rows != F.cols) throw std::invalid_argument("unitarity: matrix is not square");
    ComplexMatrix scaled = F;
    const double root = std::sqrt(static_cast<double>(F.rows));
    for (Complex& v : scaled.a) v /= root;
    return max_abs_diff(matmul(adjoint(scaled), scaled), ComplexMatrix::identity(F.rows));
}

bool is_group_hom(const GroupHomTable& t) {
    const int n = t.source.order();
    if (static_cast<int>(t.image.size()) != n) return false;
    for (int v : t.image)
        if (v < 0 || v >= t.target.order()) return false;
    if (t.image[t.source.zero()] != t.target.zero()) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t.image[t.source.add(a, b)] != t.target.add(t.image[a], t.image[b])) return false;
    return true;
}

std::vector<GroupHomTable> enumerate_homs(const FiniteAbelianGroup& G,
                                          const FiniteAbelianGroup& A,
                                          std::uint64_t max_tables) {
    const std::size_t k = G.factors.size();
    std::vector<std::vector<int>> candidates;
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < k; ++j) {
        candidates.push_back(generator_images(A, G.factors[j]));
        total *= candidates.back().size();
    }
    if (total > max_tables)
        throw std::length_error("hom enumeration: too many homomorphisms to materialize");
    std::vector<GroupHomTable> out;
    out.reserve(total);
    std::vector<std::size_t> pos(k, 0);
    for (;;) {
        std::vector<int> images(k);
        for (std::size_t j = 0; j < k; ++j) images[j] = candidates[j][pos[j]];
        out.push_back(table_from_images(G, A, images));
        std::size_t j = 0;
        while (j < k && ++pos[j] == candidates[j].size()) {
            pos[j] = 0;
            ++j;
        }
        if (j == k) break;
    }
    return out;
}

std::uint64_t count_homs_by_enumeration(const FiniteAbelianGroup& G,
                                        const FiniteAbelianGroup& A) {
    const std::size_t k = G.factors.size();
    std::vector<std::vector<int>> candidates;
    for (std::size_t j = 0; j < k; ++j) candidates.push_back(generator_images(A, G.factors[j]));
    std::uint64_t count = 0;
    std::vector<std::size_t> pos(k, 0);
    for (;;) {
        ++count;
        std::size_t j = 0;
        while (j < k && ++pos[j] == candidates[j].size()) {
            pos[j] = 0;
            ++j;
        }
        if (j == k) break;
    }
    return count;
}

std::uint64_t count_homs_formula(const FiniteAbelianGroup& G, const FiniteAbelianGroup& A) {
    const auto gs = split_all_factors(G);
    const auto as = split_all_factors(A);
    std::uint64_t total = 1;
    for (const auto& [p, a] : gs)
        for (const auto& [q, b] : as) {
            if (p != q) continue;
            const int e = std::min(a, b);
            for (int i = 0; i < e; ++i) total *= static_cast<std::uint64_t>(p);
        }
    return total;
}

Complex dj_amplitude(const GroupHomTable& f, int sigma_index) {
    const int n = f.source.order();
    Complex acc = 0.0;
    for (int g = 0; g < n; ++g) acc += character_value(f.target, sigma_index, f.image[g]);
    return acc / static_cast<double>(n);
}

std::vector<Complex> character_decomposition(const FiniteAbelianGroup& G,
                                             const std::vector<Complex>& chi) {
    const int n = G.order();
    if (static_cast<int>(chi.size()) != n)
        throw std::invalid_argument("character decomposition: wrong number of values");
    std::vector<Complex> out(n);
    for (int h = 0; h < n; ++h) {
        Complex acc = 0.0;
        for (int g = 0; g < n; ++g) acc += std::conj(character_value(G, h, g)) * chi[g];
        out[h] = acc / static_cast<double>(n);
    }
    return out;
}

IdentifyResult grouphomid_identify(const FiniteAbelianGroup& G, const FiniteAbelianGroup& A,
                                   QuantumOracle& oracle) {
    for (int q : A.factors)
        if (prime_power_split(q).size() != 1)
            throw std::invalid_argument("hom identification: target factor is not a prime power");
    const int n = G.order();
    const std::size_t nfac = A.factors.size();
    std::vector<std::vector<int>> component(nfac);
    std::vector<std::vector<double>> probabilities;
    for (std::size_t k = 0; k < nfac; ++k) {
        const GroupHomTable& f = oracle.query();
        if (!(f.source == G) || !(f.target == A))
            throw std::invalid_argument("hom identification: oracle groups do not match");
        const int q = A.factors[k];
        const FiniteAbelianGroup cyclic({q});
        // composite character: fundamental character of the factor after projection
        std::vector<Complex> chi(n);
        for (int g = 0; g < n; ++g)
            chi[g] = character_value(cyclic, A.residues(f.image[g])[k], 1);
        const auto coeffs = character_decomposition(G, chi);
        int star = -1;
        bool clean = true;
        std::vector<double> probs(n);
        for (int h = 0; h < n; ++h) {
            probs[h] = std::norm(coeffs[h]);
            if (std::abs(probs[h] - 1.0) < kTol) {
                if (star >= 0) clean = false;
                star = h;
            } else if (probs[h] > kTol) {
                clean = false;
            }
        }
        probabilities.push_back(std::move(probs));
        if (star < 0 || !clean)
            throw std::runtime_error("hom identification: no unique character, promise violated");
        // chi_{h*}(e_j) = exp(2 pi i h*_j / n_j) pins the generator image q h*_j / n_j
        const auto hr = G.residues(star);
        std::vector<int> images(G.factors.size());
        for (std::size_t j = 0; j < G.factors.size(); ++j) {
            const long long prod = static_cast<long long>(q) * hr[j];
            if (prod % G.factors[j] != 0)
                throw std::runtime_error("hom identification: non-integral image, promise violated");
            images[j] = static_cast<int>((prod / G.factors[j]) % q);
        }
        component[k].resize(n);
        for (int g = 0; g < n; ++g) {
            const auto gr = G.residues(g);
            long long acc = 0;
            for (std::size_t j = 0; j < G.factors.size(); ++j)
                acc = (acc + static_cast<long long>(gr[j]) * images[j]) % q;
            component[k][g] = static_cast<int>(acc);
        }
    }
    std::vector<int> image(n);
    for (int g = 0; g < n; ++g) {
        std::vector<int> residues(nfac);
        for (std::size_t k = 0; k < nfac; ++k) residues[k] = component[k][g];
        image[g] = A.rank(residues);
    }
    return IdentifyResult{GroupHomTable{G, A, image}, oracle.queries(), std::move(probabilities)};
}

int classical_query_count(const FiniteAbelianGroup& G) {
    return static_cast<int>(G.factors.size());
}

}  // namespace qcrel
