#include "qcrel/comp.hpp"

#include <algorithm>
#include <map>

namespace qcrel {

namespace {
// law verification is skipped above this carrier size to bound build cost
constexpr int kVerifyCarrierLimit = 48;

void check_pair_laws(const ComplementaryPair& p) {
    if (p.carrier > kVerifyCarrierLimit) return;
    if (!verify_classical_structure(p.Z).all_pass() ||
        !verify_classical_structure(p.X).all_pass())
        throw std::logic_error("pair groupoid failed classical-structure laws");
}
}  // namespace

ComplementaryPair build_pair(const FiniteAbelianGroup& G, const FiniteAbelianGroup& H) {
    const int ng = G.order(), nh = H.order();
    std::vector<AbelianGroupoid::Component> zc, xc;
    for (int g = 0; g < ng; ++g) {
        AbelianGroupoid::Component c{H, {}};
        for (int h = 0; h < nh; ++h) c.carrier.push_back(h * ng + g);
        zc.push_back(std::move(c));
    }
    for (int h = 0; h < nh; ++h) {
        AbelianGroupoid::Component c{G, {}};
        for (int g = 0; g < ng; ++g) c.carrier.push_back(h * ng + g);
        xc.push_back(std::move(c));
    }
    ComplementaryPair p{G, H, nh * ng, AbelianGroupoid(std::move(zc), nh * ng),
                        AbelianGroupoid(std::move(xc), nh * ng), true};
    check_pair_laws(p);
    return p;
}

ComplementaryPair transpose_pair(const ComplementaryPair& pair) {
    return ComplementaryPair{pair.H, pair.G, pair.carrier, pair.X, pair.Z, false};
}

ComplementaryPair canonical_pair_for(const AbelianGroupoid& Z) {
    if (!Z.uniform())
        throw size_error("canonical pair requires equal component factor sequences");
    const FiniteAbelianGroup K = Z.component(0).group;
    const int n = Z.component_count();
    ComplementaryPair p = transpose_pair(build_pair(K, FiniteAbelianGroup({n})));
    if (!(p.Z == Z)) throw std::logic_error("canonical pair layout mismatch");
    return p;
}

Rel cnot_rel(const AbelianGroupoid& Z, const AbelianGroupoid& X) {
    if (Z.carrier_size() != X.carrier_size())
        throw size_error("cnot: groupoids must share a carrier");
    const int n = Z.carrier_size();
    Rel r(n * n, n * n);
    std::vector<std::pair<int, int>> ps;
    for (int a = 0; a < n; ++a) {
        const auto& zc = Z.component(Z.component_of(a));
        for (int b : zc.carrier) {
            const int x = *Z.mult(a, b);
            const auto& xcomp = X.component(X.component_of(b));
            for (int y : xcomp.carrier) ps.emplace_back(x * n + y, a * n + *X.mult(b, y));
        }
    }
    return Rel::from_pairs(n * n, n * n, ps);
}

Rel cnot_rel(const ComplementaryPair& pair) { return cnot_rel(pair.Z, pair.X); }

bool check_complementarity(const AbelianGroupoid& Z, const AbelianGroupoid& X) {
    return is_bijection(cnot_rel(Z, X)) && is_bijection(cnot_rel(X, Z));
}

bool check_complementarity(const ComplementaryPair& pair) {
    return check_complementarity(pair.Z, pair.X);
}

namespace {
bool coherence(const AbelianGroupoid& Z, const AbelianGroupoid& X) {
    const Rel uX = unit_rel(X);
    const Rel deltaZ = converse(mult_rel(Z));
    if (compose(deltaZ, uX) != tensor(uX, uX)) return false;
    return compose(converse(unit_rel(Z)), uX) == Rel::identity(1);
}

bool bialgebra(const AbelianGroupoid& Z, const AbelianGroupoid& X) {
    const int n = Z.carrier_size();
    const Rel id = Rel::identity(n);
    const Rel mX = mult_rel(X);
    const Rel deltaZ = converse(mult_rel(Z));
    const Rel lhs = compose(deltaZ, mX);
    const Rel mid = tensor(tensor(id, swap_rel(n, n)), id);
    const Rel rhs = compose(tensor(mX, mX), compose(mid, tensor(deltaZ, deltaZ)));
    return lhs == rhs;
}
}  // namespace

bool check_strong_complementarity(const AbelianGroupoid& Z, const AbelianGroupoid& X) {
    if (Z.carrier_size() != X.carrier_size())
        throw size_error("strong complementarity: groupoids must share a carrier");
    return coherence(Z, X) && coherence(X, Z) && bialgebra(Z, X) && bialgebra(X, Z);
}

bool grid_criterion(const AbelianGroupoid& Z, const AbelianGroupoid& X) {
    if (Z.carrier_size() != X.carrier_size())
        throw size_error("grid criterion: groupoids must share a carrier");
    for (int i = 1; i < Z.component_count(); ++i)
        if (Z.component(i).group.prime_power_multiset() !=
            Z.component(0).group.prime_power_multiset())
            return false;
    for (int i = 1; i < X.component_count(); ++i)
        if (X.component(i).group.prime_power_multiset() !=
            X.component(0).group.prime_power_multiset())
            return false;
    const auto zs = classical_states(Z), xs = classical_states(X);
    for (const auto& z : zs)
        for (const auto& x : xs)
            if (z.set_intersection(x).count() != 1) return false;
    return true;
}

RelFourierMap rel_fourier(const ComplementaryPair& pair) {
    RelFourierMap m{classical_states(pair.Z), unbiased_states(pair.X)};
    if (m.z_classical.size() != m.x_unbiased.size())
        throw std::logic_error("state lists must biject");
    for (size_t i = 0; i < m.z_classical.size(); ++i)
        if (!(m.z_classical[i] == m.x_unbiased[i]))
            throw std::logic_error("classical states of Z must equal unbiased states of X");
    return m;
}

Rel rel_fourier_matrix(const ComplementaryPair& pair, const std::vector<int>& psi) {
    if (!pair.canonical_grid)
        throw std::invalid_argument("fourier matrix needs the canonical grid labeling");
    const int ng = pair.G.order(), nh = pair.H.order();
    if (ng != nh) throw size_error("fourier matrix needs |G| = |H|");
    if (static_cast<int>(psi.size()) != ng)
        throw std::invalid_argument("psi must map every element of G");
    std::vector<int> inv(nh, -1);
    for (int g = 0; g < ng; ++g) {
        if (psi[g] < 0 || psi[g] >= nh || inv[psi[g]] != -1)
            throw std::invalid_argument("psi must be a bijection");
        inv[psi[g]] = g;
    }
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < ng; ++b)
            if (psi[pair.G.add(a, b)] != pair.H.add(psi[a], psi[b]))
                throw std::invalid_argument("psi must be a group homomorphism");

    Rel t = Rel::from_predicate(pair.carrier, pair.carrier, [&](int from, int to) {
        const int h = from / ng, g = from % ng;
        return to == psi[g] * ng + inv[h];
    });

    const Rel mZ = mult_rel(pair.Z), mX = mult_rel(pair.X);
    const Rel uZ = unit_rel(pair.Z), uX = unit_rel(pair.X);
    const Rel tt = tensor(t, t);
    bool ok = is_bijection(t) && compose(converse(mX), t) == compose(tt, converse(mZ)) &&
              compose(converse(uX), t) == converse(uZ) && compose(t, mX) == compose(mZ, tt) &&
              compose(t, uX) == uZ;
    if (!ok) throw std::logic_error("fourier matrix failed a homomorphism equation");
    return t;
}

Rel antipode_rel(const ComplementaryPair& pair) {
    if (!pair.canonical_grid) {
        return Rel::from_predicate(pair.carrier, pair.carrier, [&](int from, int to) {
            return to == pair.Z.inverse(pair.X.inverse(from));
        });
    }
    const int ng = pair.G.order();
    return Rel::from_predicate(pair.carrier, pair.carrier, [&](int from, int to) {
        const int h = from / ng, g = from % ng;
        return to == pair.H.neg(h) * ng + pair.G.neg(g);
    });
}

bool check_resolution_of_identity(const AbelianGroupoid& Z) {
    const int n = Z.carrier_size();
    Rel acc = Rel::empty(n, n);
    for (const auto& s : classical_states(Z)) acc = union_rel(acc, density_matrix(s));
    return acc == Rel::identity(n);
}

namespace {
std::vector<Subset> span_of(const std::vector<Subset>& states, int carrier) {
    std::vector<Subset> out;
    const int k = static_cast<int>(states.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
        Subset u(carrier);
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) u = u.set_union(states[i]);
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}
}  // namespace

std::vector<Subset> span_intersection(const ComplementaryPair& pair) {
    const auto a = span_of(classical_states(pair.Z), pair.carrier);
    const auto b = span_of(classical_states(pair.X), pair.carrier);
    std::vector<Subset> out;
    for (const auto& s : a)
        if (std::find(b.begin(), b.end(), s) != b.end()) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qcrel
