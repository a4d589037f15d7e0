#include "qcrel/groupoid.hpp"

#include <algorithm>
#include <numeric>

namespace qcrel {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> fs) : factors(std::move(fs)) {
    if (factors.empty()) throw size_error("group needs at least one factor");
    order_ = 1;
    for (int f : factors) {
        if (f < 1) throw size_error("cyclic factors must be >= 1");
        order_ *= f;
    }
}

std::vector<int> FiniteAbelianGroup::residues(int e) const {
    std::vector<int> r(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
        r[i] = e % factors[i];
        e /= factors[i];
    }
    return r;
}

int FiniteAbelianGroup::rank(const std::vector<int>& residues) const {
    if (residues.size() != factors.size()) throw size_error("residue tuple length mismatch");
    int e = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (residues[i] < 0 || residues[i] >= factors[i])
            throw size_error("residue out of range");
        e = e * factors[i] + residues[i];
    }
    return e;
}

int FiniteAbelianGroup::add(int a, int b) const {
    auto ra = residues(a), rb = residues(b);
    for (size_t i = 0; i < factors.size(); ++i) ra[i] = (ra[i] + rb[i]) % factors[i];
    return rank(ra);
}

int FiniteAbelianGroup::neg(int a) const {
    auto r = residues(a);
    for (size_t i = 0; i < factors.size(); ++i) r[i] = (factors[i] - r[i]) % factors[i];
    return rank(r);
}

int FiniteAbelianGroup::scalar_mul(int k, int a) const {
    auto r = residues(a);
    for (size_t i = 0; i < factors.size(); ++i)
        r[i] = static_cast<int>((static_cast<long long>(r[i]) * k) % factors[i]);
    return rank(r);
}

int FiniteAbelianGroup::element_order(int a) const {
    auto r = residues(a);
    long long ord = 1;
    for (size_t i = 0; i < factors.size(); ++i) {
        int g = std::gcd(r[i], factors[i]);
        ord = std::lcm(ord, static_cast<long long>(factors[i] / g));
    }
    return static_cast<int>(ord);
}

std::vector<int> FiniteAbelianGroup::prime_power_multiset() const {
    std::vector<int> out;
    for (int f : factors) {
        int n = f;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            int q = 1;
            while (n % p == 0) {
                q *= p;
                n /= p;
            }
            out.push_back(q);
        }
        if (n > 1) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AbelianGroupoid::AbelianGroupoid(std::vector<FiniteAbelianGroup> component_groups) {
    if (component_groups.empty()) throw size_error("groupoid needs at least one component");
    int offset = 0;
    for (auto& g : component_groups) {
        Component c{g, {}};
        c.carrier.resize(g.order());
        std::iota(c.carrier.begin(), c.carrier.end(), offset);
        offset += g.order();
        components_.push_back(std::move(c));
    }
    carrier_size_ = offset;
    comp_of_.assign(carrier_size_, -1);
    rank_of_.assign(carrier_size_, -1);
    for (int i = 0; i < component_count(); ++i)
        for (int k = 0; k < static_cast<int>(components_[i].carrier.size()); ++k) {
            comp_of_[components_[i].carrier[k]] = i;
            rank_of_[components_[i].carrier[k]] = k;
        }
}

AbelianGroupoid::AbelianGroupoid(std::vector<Component> components, int carrier_size)
    : components_(std::move(components)), carrier_size_(carrier_size) {
    if (components_.empty()) throw size_error("groupoid needs at least one component");
    comp_of_.assign(carrier_size_, -1);
    rank_of_.assign(carrier_size_, -1);
    for (int i = 0; i < component_count(); ++i) {
        const auto& c = components_[i];
        if (static_cast<int>(c.carrier.size()) != c.group.order())
            throw size_error("component carrier size must equal group order");
        for (int k = 0; k < static_cast<int>(c.carrier.size()); ++k) {
            int x = c.carrier[k];
            if (x < 0 || x >= carrier_size_ || comp_of_[x] != -1)
                throw size_error("component carriers must partition the carrier");
            comp_of_[x] = i;
            rank_of_[x] = k;
        }
    }
    for (int x = 0; x < carrier_size_; ++x)
        if (comp_of_[x] == -1) throw size_error("component carriers must partition the carrier");
}

std::optional<int> AbelianGroupoid::mult(int x, int y) const {
    int c = comp_of_[x];
    if (c != comp_of_[y]) return std::nullopt;
    const auto& comp = components_[c];
    return comp.carrier[comp.group.add(rank_of_[x], rank_of_[y])];
}

int AbelianGroupoid::inverse(int x) const {
    const auto& comp = components_[comp_of_[x]];
    return comp.carrier[comp.group.neg(rank_of_[x])];
}

std::vector<int> AbelianGroupoid::identity_set() const {
    std::vector<int> out;
    for (const auto& c : components_) out.push_back(c.carrier[0]);
    return out;
}

bool AbelianGroupoid::is_identity(int x) const { return rank_of_[x] == 0; }

GroupoidElement AbelianGroupoid::element(int x) const {
    int c = comp_of_[x];
    return GroupoidElement{c, components_[c].group.residues(rank_of_[x])};
}

int AbelianGroupoid::flat_index(const GroupoidElement& e) const {
    const auto& comp = components_.at(e.component);
    return comp.carrier[comp.group.rank(e.residues)];
}

bool AbelianGroupoid::uniform() const {
    for (const auto& c : components_)
        if (!(c.group == components_[0].group)) return false;
    return true;
}

bool AbelianGroupoid::operator==(const AbelianGroupoid& other) const {
    if (carrier_size_ != other.carrier_size_ || component_count() != other.component_count())
        return false;
    for (int i = 0; i < component_count(); ++i) {
        if (!(components_[i].group == other.components_[i].group)) return false;
        if (components_[i].carrier != other.components_[i].carrier) return false;
    }
    return true;
}

Rel mult_rel(const AbelianGroupoid& Z) {
    const int n = Z.carrier_size();
    Rel r(n * n, n);
    std::vector<std::pair<int, int>> ps;
    for (int ci = 0; ci < Z.component_count(); ++ci) {
        const auto& c = Z.component(ci);
        for (int x : c.carrier)
            for (int y : c.carrier) ps.emplace_back(x * n + y, *Z.mult(x, y));
    }
    return Rel::from_pairs(n * n, n, ps);
}

Rel unit_rel(const AbelianGroupoid& Z) {
    std::vector<std::pair<int, int>> ps;
    for (int e : Z.identity_set()) ps.emplace_back(0, e);
    return Rel::from_pairs(1, Z.carrier_size(), ps);
}

bool LawReport::all_pass() const {
    for (const auto& [name, ok] : laws)
        if (!ok) return false;
    return true;
}

LawReport verify_classical_structure_rels(const Rel& m, const Rel& u, int n) {
    if (m.dom_size() != n * n || m.cod_size() != n)
        throw size_error("multiplication relation must be (A x A) -> A");
    if (u.dom_size() != 1 || u.cod_size() != n)
        throw size_error("unit relation must be {*} -> A");
    const Rel id = Rel::identity(n);
    const Rel delta = converse(m);
    const Rel sigma = swap_rel(n, n);
    const Rel delta_u = compose(delta, u);

    LawReport rep;
    rep.laws.emplace_back("associativity",
                          compose(m, tensor(m, id)) == compose(m, tensor(id, m)));
    rep.laws.emplace_back("coassociativity", compose(tensor(delta, id), delta) ==
                                                 compose(tensor(id, delta), delta));
    rep.laws.emplace_back("unitality", compose(m, tensor(u, id)) == id &&
                                           compose(m, tensor(id, u)) == id);
    rep.laws.emplace_back("counitality",
                          compose(tensor(converse(u), id), delta) == id &&
                              compose(tensor(id, converse(u)), delta) == id);
    const Rel frob_mid = compose(delta, m);
    rep.laws.emplace_back("frobenius",
                          compose(tensor(id, m), tensor(delta, id)) == frob_mid &&
                              compose(tensor(m, id), tensor(id, delta)) == frob_mid);
    rep.laws.emplace_back("specialness", compose(m, delta) == id);
    rep.laws.emplace_back("symmetry", compose(sigma, delta_u) == delta_u);
    rep.laws.emplace_back("commutativity", compose(m, sigma) == m);
    return rep;
}

LawReport verify_classical_structure(const AbelianGroupoid& Z) {
    return verify_classical_structure_rels(mult_rel(Z), unit_rel(Z), Z.carrier_size());
}

std::vector<Subset> classical_states(const AbelianGroupoid& Z) {
    std::vector<Subset> out;
    for (int i = 0; i < Z.component_count(); ++i)
        out.push_back(Subset::from_indices(Z.carrier_size(), Z.component(i).carrier));
    return out;
}

std::vector<Subset> unbiased_states(const AbelianGroupoid& Z) {
    if (!Z.uniform())
        throw size_error("unbiased states require equal component factor sequences");
    std::vector<Subset> out;
    const int per = Z.component(0).group.order();
    for (int k = 0; k < per; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < Z.component_count(); ++i) idx.push_back(Z.component(i).carrier[k]);
        out.push_back(Subset::from_indices(Z.carrier_size(), idx));
    }
    return out;
}

std::vector<std::vector<int>> phase_group(const AbelianGroupoid& Z) {
    std::vector<std::vector<int>> out;
    std::vector<int> choice(Z.component_count(), 0);
    while (true) {
        std::vector<int> phase;
        for (int i = 0; i < Z.component_count(); ++i)
            phase.push_back(Z.component(i).carrier[choice[i]]);
        out.push_back(std::move(phase));
        int i = Z.component_count() - 1;
        while (i >= 0) {
            if (++choice[i] < Z.component(i).group.order()) break;
            choice[i--] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

Subset apply_phase(const AbelianGroupoid& Z, const std::vector<int>& phase, const Subset& s) {
    if (static_cast<int>(phase.size()) != Z.component_count())
        throw size_error("phase must pick one element per component");
    for (int i = 0; i < Z.component_count(); ++i)
        if (Z.component_of(phase[i]) != i)
            throw size_error("phase element not in its component");
    if (s.parent_size() != Z.carrier_size())
        throw size_error("subset parent must equal the carrier");
    std::vector<int> idx;
    for (int x : s.indices()) idx.push_back(*Z.mult(phase[Z.component_of(x)], x));
    return Subset::from_indices(Z.carrier_size(), idx);
}

Subset ghz_state(const AbelianGroupoid& Z) {
    const int n = Z.carrier_size();
    std::vector<int> idx;
    for (int ci = 0; ci < Z.component_count(); ++ci) {
        const auto& c = Z.component(ci);
        for (int a : c.carrier)
            for (int b : c.carrier) {
                int cc = Z.inverse(*Z.mult(a, b));
                idx.push_back((a * n + b) * n + cc);
            }
    }
    return Subset::from_indices(n * n * n, idx);
}

Rel density_matrix(const Subset& s) {
    const int n = s.parent_size();
    Rel r(n, n);
    for (int x : s.indices())
        for (int y : s.indices()) r.set(x, y);
    return r;
}

}  // namespace qcrel
