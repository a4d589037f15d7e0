#include "qcrel/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

#include "qcrel/classrel.hpp"
#include "qcrel/comp.hpp"
#include "qcrel/fourier.hpp"
#include "qcrel/groupoid.hpp"
#include "qcrel/qcalg.hpp"
#include "qcrel/rel.hpp"

namespace qcrel {

namespace {

using PairList = std::vector<std::pair<int, int>>;

// fixed seed keeps randomized checks identical across runs
constexpr unsigned kSeed = 77041u;

Rel random_rel(std::mt19937& rng, int dom, int cod) {
    std::bernoulli_distribution bit(0.4);
    PairList ps;
    for (int a = 0; a < dom; ++a)
        for (int b = 0; b < cod; ++b)
            if (bit(rng)) ps.emplace_back(a, b);
    return Rel::from_pairs(dom, cod, ps);
}

bool is_prime_power(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            return n == 1;
        }
    }
    return true;
}

// one group per isomorphism class: non-decreasing prime-power factor multisets
std::vector<FiniteAbelianGroup> abelian_groups_up_to(int max_order) {
    std::vector<FiniteAbelianGroup> out;
    out.push_back(FiniteAbelianGroup({1}));
    std::vector<int> powers;
    for (int n = 2; n <= max_order; ++n)
        if (is_prime_power(n)) powers.push_back(n);
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start, long long product) -> void {
        if (!cur.empty()) out.push_back(FiniteAbelianGroup(cur));
        for (std::size_t i = start; i < powers.size(); ++i) {
            if (product * powers[i] > max_order) continue;
            cur.push_back(powers[i]);
            self(self, i, product * powers[i]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 1);
    return out;
}

// groupoids whose components are cyclic groups of order 1..4
std::vector<AbelianGroupoid> cyclic_component_groupoids(int max_carrier) {
    std::vector<AbelianGroupoid> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_order, int used) -> void {
        if (!cur.empty()) {
            std::vector<FiniteAbelianGroup> comps;
            for (int n : cur) comps.push_back(FiniteAbelianGroup({n}));
            out.push_back(AbelianGroupoid(comps));
        }
        for (int n = min_order; n <= 4; ++n) {
            if (used + n > max_carrier) break;
            cur.push_back(n);
            self(self, n, used + n);
            cur.pop_back();
        }
    };
    rec(rec, 1, 0);
    return out;
}

AbelianGroupoid uniform_groupoid(const FiniteAbelianGroup& K, int copies) {
    std::vector<FiniteAbelianGroup> comps(copies, K);
    return AbelianGroupoid(comps);
}

bool subset_eq(const Subset& a, const Subset& b) { return a == b; }

std::set<PairList> as_pair_sets(const std::vector<ClassicalRelation>& rels) {
    std::set<PairList> out;
    for (const auto& r : rels) out.insert(r.rel.pairs());
    return out;
}

std::set<PairList> sorted_golden(std::vector<PairList> tables) {
    std::set<PairList> out;
    for (auto& t : tables) {
        std::sort(t.begin(), t.end());
        out.insert(t);
    }
    return out;
}

const std::vector<PairList>& golden_z3() {
    static const std::vector<PairList> t = {
        {{0, 0}, {0, 1}, {0, 2}},
        {{0, 0}, {1, 1}, {2, 2}},
        {{0, 0}, {1, 2}, {2, 1}},
    };
    return t;
}

const std::vector<PairList>& golden_z4() {
    static const std::vector<PairList> t = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
        {{0, 0}, {2, 1}, {0, 2}, {2, 3}},
        {{0, 0}, {3, 1}, {2, 2}, {1, 3}},
    };
    return t;
}

const std::vector<PairList>& golden_z2z2() {
    static const std::vector<PairList> t = {
        {{0, 2}, {2, 2}, {1, 3}, {3, 3}},
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
        {{0, 2}, {2, 2}, {1, 3}, {2, 3}},
        {{0, 0}, {1, 1}, {2, 2}, {2, 3}},
        {{0, 2}, {2, 2}, {0, 3}, {3, 3}},
        {{0, 0}, {0, 1}, {2, 2}, {3, 3}},
        {{0, 2}, {2, 2}, {0, 3}, {2, 3}},
        {{0, 0}, {0, 1}, {2, 2}, {2, 3}},
        {{2, 0}, {3, 1}, {0, 2}, {1, 3}},
        {{0, 0}, {2, 0}, {1, 1}, {3, 1}},
        {{2, 0}, {3, 1}, {0, 2}, {0, 3}},
        {{0, 0}, {2, 0}, {1, 1}, {2, 1}},
        {{2, 0}, {2, 1}, {0, 2}, {1, 3}},
        {{0, 0}, {2, 0}, {0, 1}, {3, 1}},
        {{2, 0}, {2, 1}, {0, 2}, {0, 3}},
        {{0, 0}, {2, 0}, {0, 1}, {2, 1}},
    };
    return t;
}

AbelianGroupoid instance_z3() { return AbelianGroupoid({FiniteAbelianGroup({3})}); }
AbelianGroupoid instance_z4() { return AbelianGroupoid({FiniteAbelianGroup({4})}); }
AbelianGroupoid instance_z2z2() {
    return AbelianGroupoid({FiniteAbelianGroup({2}), FiniteAbelianGroup({2})});
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

bool SuiteResult::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

int SuiteResult::passed_count() const {
    int n = 0;
    for (const auto& c : checks)
        if (c.passed) ++n;
    return n;
}

SuiteResult run_suite_rel() {
    Timer timer;
    SuiteResult suite{"rel", {}, 0.0};
    std::mt19937 rng(kSeed);

    bool assoc = true;
    for (int i = 0; i < 60; ++i) {
        std::uniform_int_distribution<int> size(1, 6);
        const int a = size(rng), b = size(rng), c = size(rng), d = size(rng);
        const Rel f = random_rel(rng, a, b);
        const Rel g = random_rel(rng, b, c);
        const Rel h = random_rel(rng, c, d);
        if (compose(h, compose(g, f)) != compose(compose(h, g), f)) assoc = false;
    }
    suite.checks.push_back({"composition is associative on random triples", assoc});

    bool dagger = true;
    for (int i = 0; i < 60; ++i) {
        std::uniform_int_distribution<int> size(1, 6);
        const int a = size(rng), b = size(rng), c = size(rng);
        const Rel f = random_rel(rng, a, b);
        const Rel g = random_rel(rng, b, c);
        if (converse(compose(g, f)) != compose(converse(f), converse(g))) dagger = false;
    }
    suite.checks.push_back({"converse antidistributes over composition", dagger});

    bool functorial = true;
    for (int i = 0; i < 60; ++i) {
        std::uniform_int_distribution<int> size(1, 4);
        const int a1 = size(rng), b1 = size(rng), c1 = size(rng);
        const int a2 = size(rng), b2 = size(rng), c2 = size(rng);
        const Rel f1 = random_rel(rng, a1, b1), g1 = random_rel(rng, b1, c1);
        const Rel f2 = random_rel(rng, a2, b2), g2 = random_rel(rng, b2, c2);
        if (compose(tensor(g1, g2), tensor(f1, f2)) !=
            tensor(compose(g1, f1), compose(g2, f2)))
            functorial = false;
    }
    suite.checks.push_back({"tensor is functorial on random squares", functorial});

    bool bij = true;
    for (int mask = 0; mask < 512; ++mask) {
        PairList ps;
        for (int k = 0; k < 9; ++k)
            if (mask & (1 << k)) ps.emplace_back(k / 3, k % 3);
        const Rel r = Rel::from_pairs(3, 3, ps);
        if (is_bijection(r) != is_bijection_by_counts(r)) bij = false;
    }
    suite.checks.push_back({"bijection checks agree on all 512 relations on three elements", bij});

    suite.elapsed_ms = timer.ms();
    return suite;
}

SuiteResult run_suite_groupoid(bool inject_mutation) {
    Timer timer;
    SuiteResult suite{"groupoid", {}, 0.0};

    // the mutation fixture drops one product pair from a genuine multiplication
    const AbelianGroupoid fixture = instance_z2z2();
    const Rel genuine_mult = mult_rel(fixture);
    const Rel dropped = Rel::from_pairs(16, 4, {{1 * 4 + 1, 0}});
    const Rel mutated_mult = sym_diff(genuine_mult, dropped);
    const LawReport mutated_report =
        verify_classical_structure_rels(mutated_mult, unit_rel(fixture), 4);

    if (inject_mutation) {
        for (const auto& [name, ok] : mutated_report.laws)
            suite.checks.push_back({"law " + name, ok});
        suite.elapsed_ms = timer.ms();
        return suite;
    }

    std::vector<AbelianGroupoid> groupoids = cyclic_component_groupoids(12);
    const FiniteAbelianGroup z2({2}), z3({3}), z2z2({2, 2}), z2z3({2, 3});
    groupoids.push_back(AbelianGroupoid({z2z2}));
    groupoids.push_back(AbelianGroupoid({z2z2, z2z2}));
    groupoids.push_back(AbelianGroupoid({z2z3}));
    groupoids.push_back(AbelianGroupoid({z2z2, z2}));
    groupoids.push_back(AbelianGroupoid({FiniteAbelianGroup({3, 3})}));

    bool laws = true;
    for (const auto& Z : groupoids)
        if (!verify_classical_structure(Z).all_pass()) laws = false;
    suite.checks.push_back(
        {"classical-structure laws hold for carriers up to 12 from factors 1..4", laws});

    bool totality = true;
    for (const auto& Z : groupoids) {
        for (int x = 0; x < Z.carrier_size(); ++x)
            for (int y = 0; y < Z.carrier_size(); ++y) {
                const bool same = Z.component_of(x) == Z.component_of(y);
                if (Z.mult(x, y).has_value() != same) totality = false;
            }
    }
    suite.checks.push_back({"multiplication is total exactly within components", totality});

    bool partitions = true;
    for (const auto& Z : groupoids) {
        Subset seen(Z.carrier_size());
        int covered = 0;
        for (const Subset& s : classical_states(Z)) {
            if (s.intersects(seen)) partitions = false;
            seen = seen.set_union(s);
            covered += s.count();
        }
        if (covered != Z.carrier_size()) partitions = false;
        if (Z.uniform()) {
            Subset useen(Z.carrier_size());
            int ucov = 0;
            for (const Subset& s : unbiased_states(Z)) {
                if (s.intersects(useen)) partitions = false;
                useen = useen.set_union(s);
                ucov += s.count();
            }
            if (ucov != Z.carrier_size()) partitions = false;
        }
    }
    suite.checks.push_back({"classical and unbiased states partition the carrier", partitions});

    bool phases = true;
    for (const auto& Z : groupoids) {
        if (Z.carrier_size() > 8) continue;
        for (const auto& phase : phase_group(Z)) {
            std::vector<bool> hit(Z.carrier_size(), false);
            for (int x = 0; x < Z.carrier_size(); ++x) {
                const Subset img =
                    apply_phase(Z, phase, Subset::from_indices(Z.carrier_size(), {x}));
                if (img.count() != 1) phases = false;
                for (int y : img.indices()) {
                    if (hit[y]) phases = false;
                    hit[y] = true;
                }
            }
        }
    }
    suite.checks.push_back({"every phase acts as a bijection", phases});

    suite.checks.push_back(
        {"corrupted multiplication is rejected by the law checks", !mutated_report.all_pass()});

    suite.elapsed_ms = timer.ms();
    return suite;
}

SuiteResult run_suite_comp() {
    Timer timer;
    SuiteResult suite{"comp", {}, 0.0};

    const auto groups = abelian_groups_up_to(4);
    std::vector<ComplementaryPair> pairs;
    for (const auto& G : groups)
        for (const auto& H : groups) pairs.push_back(build_pair(G, H));

    bool comp_ok = true;
    for (const auto& p : pairs)
        if (!check_complementarity(p) || !check_strong_complementarity(p.Z, p.X) ||
            !grid_criterion(p.Z, p.X))
            comp_ok = false;
    suite.checks.push_back(
        {"grid pairs with factors up to 4 are strongly complementary", comp_ok});

    // same-carrier structures that are not complementary
    const FiniteAbelianGroup z4({4}), z2({2});
    std::vector<std::pair<AbelianGroupoid, AbelianGroupoid>> negatives;
    negatives.emplace_back(AbelianGroupoid({z4}), AbelianGroupoid({z4}));
    negatives.emplace_back(AbelianGroupoid({z2, z2}), AbelianGroupoid({z2, z2}));
    negatives.emplace_back(AbelianGroupoid({z2, z2}), AbelianGroupoid({z4}));

    bool negatives_fail = true;
    for (const auto& [Z, X] : negatives)
        if (check_complementarity(Z, X) || is_bijection(cnot_rel(Z, X))) negatives_fail = false;
    suite.checks.push_back(
        {"mismatched structures fail complementarity and the controlled map", negatives_fail});

    bool cnot_agree = true;
    for (const auto& p : pairs) {
        const Rel c = cnot_rel(p);
        if (is_bijection(c) != is_bijection_by_counts(c)) cnot_agree = false;
    }
    for (const auto& [Z, X] : negatives) {
        const Rel c = cnot_rel(Z, X);
        if (is_bijection(c) != is_bijection_by_counts(c)) cnot_agree = false;
    }
    suite.checks.push_back({"controlled-map bijection checks agree", cnot_agree});

    bool strong_grid = true;
    for (const auto& p : pairs)
        if (check_strong_complementarity(p.Z, p.X) != grid_criterion(p.Z, p.X))
            strong_grid = false;
    for (const auto& [Z, X] : negatives)
        if (check_strong_complementarity(Z, X) != grid_criterion(Z, X)) strong_grid = false;
    suite.checks.push_back(
        {"bialgebra equations agree with the singleton-grid criterion", strong_grid});

    bool fourier_lists = true;
    for (const auto& p : pairs) {
        const RelFourierMap m = rel_fourier(p);
        if (m.z_classical.size() != m.x_unbiased.size()) fourier_lists = false;
        for (std::size_t i = 0; i < m.z_classical.size(); ++i)
            if (!subset_eq(m.z_classical[i], m.x_unbiased[i])) fourier_lists = false;
    }
    suite.checks.push_back(
        {"classical states of one basis list the unbiased states of the other", fourier_lists});

    bool fmat_ok = true;
    for (const auto& G : groups) {
        if (G.order() < 1) continue;
        const ComplementaryPair p = build_pair(G, G);
        std::vector<int> psi(G.order());
        for (int i = 0; i < G.order(); ++i) psi[i] = i;
        try {
            if (!is_bijection(rel_fourier_matrix(p, psi))) fmat_ok = false;
        } catch (const std::exception&) {
            fmat_ok = false;
        }
    }
    suite.checks.push_back(
        {"grid transpose satisfies the structure-homomorphism equations", fmat_ok});

    bool span_ok = true;
    for (const auto& p : pairs) {
        if (p.G.order() < 2 || p.H.order() < 2) continue;
        const auto spans = span_intersection(p);
        if (spans.size() != 2) span_ok = false;
        if (spans.size() == 2) {
            if (!(spans[0] == Subset(p.carrier) && spans[1] == Subset::full(p.carrier)))
                span_ok = false;
        }
    }
    suite.checks.push_back({"basis spans meet only in the empty and full subsets", span_ok});

    bool resolution_ok = true;
    for (const auto& Z : cyclic_component_groupoids(8)) {
        bool discrete = true;
        for (int i = 0; i < Z.component_count(); ++i)
            if (Z.component(i).group.order() != 1) discrete = false;
        if (check_resolution_of_identity(Z) != discrete) resolution_ok = false;
    }
    suite.checks.push_back(
        {"resolution of the identity holds exactly for discrete structures", resolution_ok});

    suite.elapsed_ms = timer.ms();
    return suite;
}

SuiteResult run_suite_classrel() {
    Timer timer;
    SuiteResult suite{"classrel", {}, 0.0};

    const AbelianGroupoid z3 = instance_z3(), z4 = instance_z4(), z2z2 = instance_z2z2();
    const auto rels_z3 = enumerate_classical_relations(z3, z3);
    const auto rels_z4 = enumerate_classical_relations(z4, z4);
    const auto rels_z2z2 = enumerate_classical_relations(z2z2, z2z2);

    suite.checks.push_back({"three-element cyclic table reproduced",
                            as_pair_sets(rels_z3) == sorted_golden(golden_z3())});
    suite.checks.push_back({"four-element cyclic table reproduced",
                            as_pair_sets(rels_z4) == sorted_golden(golden_z4())});
    suite.checks.push_back({"sixteen-relation two-component table reproduced",
                            as_pair_sets(rels_z2z2) == sorted_golden(golden_z2z2())});

    bool conj = true;
    for (const auto* rels : {&rels_z3, &rels_z4, &rels_z2z2})
        for (const auto& f : *rels)
            if (!is_self_conjugate(f)) conj = false;
    suite.checks.push_back({"every enumerated relation is self conjugate", conj});

    bool constants = true;
    for (const auto& [pair_AB, rels] :
         {std::make_pair(std::make_pair(z3, z3), &rels_z3),
          std::make_pair(std::make_pair(z4, z4), &rels_z4),
          std::make_pair(std::make_pair(z2z2, z2z2), &rels_z2z2)}) {
        const auto& [A, B] = pair_AB;
        const auto found = as_pair_sets(*rels);
        const Subset units = Subset::from_indices(A.carrier_size(), A.identity_set());
        for (const Subset& c : classical_states(B)) {
            PairList ps;
            for (int a : units.indices())
                for (int b : c.indices()) ps.emplace_back(a, b);
            std::sort(ps.begin(), ps.end());
            if (found.find(ps) == found.end()) constants = false;
        }
    }
    suite.checks.push_back({"constant relations appear in every enumeration", constants});

    bool partition_free = true;
    const auto serial = enumerate_classical_relations(z2z2, z2z2, 25, false, true);
    const auto no_prune = enumerate_classical_relations(z2z2, z2z2, 25, true, false);
    const auto serial_no_prune = enumerate_classical_relations(z2z2, z2z2, 25, false, false);
    auto same = [](const std::vector<ClassicalRelation>& a,
                   const std::vector<ClassicalRelation>& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].rel != b[i].rel) return false;
        return true;
    };
    if (!same(rels_z2z2, serial) || !same(rels_z2z2, no_prune) ||
        !same(rels_z2z2, serial_no_prune))
        partition_free = false;
    suite.checks.push_back(
        {"enumeration is independent of workers and pruning", partition_free});

    suite.elapsed_ms = timer.ms();
    return suite;
}

SuiteResult run_suite_qcalg() {
    Timer timer;
    SuiteResult suite{"qcalg", {}, 0.0};

    const AbelianGroupoid z3 = instance_z3(), z4 = instance_z4(), z2z2 = instance_z2z2();
    const ComplementaryPair p3 = canonical_pair_for(z3);
    const ComplementaryPair p4 = canonical_pair_for(z4);
    const ComplementaryPair p22 = canonical_pair_for(z2z2);

    bool oracle_bij = true;
    const auto run_instance = [&](const AbelianGroupoid& Z, const ComplementaryPair& p) {
        for (const auto& f : enumerate_classical_relations(Z, Z))
            if (!is_bijection(build_oracle(f, p, p).rel)) oracle_bij = false;
    };
    try {
        run_instance(z3, p3);
        run_instance(z4, p4);
        run_instance(z2z2, p22);
    } catch (const std::exception&) {
        oracle_bij = false;
    }
    suite.checks.push_back({"oracles of enumerated relations are bijections", oracle_bij});

    const auto rels = enumerate_classical_relations(z2z2, z2z2);
    bool dj_sound = true;
    int constants_seen = 0, balanced_seen = 0;
    for (const auto& f : rels) {
        const auto out = dj_run(f, p22, p22);
        const bool constant = is_constant_rel(f.rel, z2z2, z2z2);
        const bool balanced = is_balanced_rel(f.rel, p22, p22);
        constants_seen += constant;
        balanced_seen += balanced;
        if (constant && balanced) dj_sound = false;
        if (constant && out.scalar != Scalar::one) dj_sound = false;
        if ((out.scalar == Scalar::zero) != balanced) dj_sound = false;
    }
    if (constants_seen != 2 || balanced_seen != 4) dj_sound = false;
    suite.checks.push_back(
        {"distinguishing scalar matches the constant and balanced predicates", dj_sound});

    bool lemma = check_balanced_preimage_lemma(z3, z3) && check_balanced_preimage_lemma(z4, z4) &&
                 check_balanced_preimage_lemma(z2z2, z2z2);
    suite.checks.push_back({"balanced relations need support outside the unit block", lemma});

    bool zero_cond = true;
    for (const auto& f : rels) {
        const auto out = grover_run(f.rel, p22, p22, 1);
        for (std::size_t r = 0; r < out.possible_classical_outcomes.size(); ++r)
            if (out.possible_classical_outcomes[r].second != !out.zero_condition[r])
                zero_cond = false;
    }
    suite.checks.push_back(
        {"search possibility is the negation of the zero condition here", zero_cond});

    bool examples = true;
    {
        const Rel f1 = Rel::from_pairs(4, 4, {{0, 2}, {2, 2}, {1, 3}, {3, 3}});
        const Rel f2 = Rel::from_pairs(4, 4, {{0, 0}, {2, 0}, {0, 1}, {2, 1}});
        const Subset expect = Subset::from_indices(4, {1, 3});
        if (!(grover_run(f1, p22, p22, 1).output_state == expect)) examples = false;
        if (!(grover_run(f2, p22, p22, 1).output_state == expect)) examples = false;
        // marked-state search: every block maps to sigma except the marked one
        const Rel marked = Rel::from_pairs(
            4, 4, {{0, 1}, {0, 3}, {2, 1}, {2, 3}, {1, 0}, {1, 2}, {3, 0}, {3, 2}});
        const auto out = grover_run(marked, p22, p22, 1);
        if (!(out.output_state == expect)) examples = false;
        for (const auto& [r, possible] : out.possible_classical_outcomes)
            if (possible != (r == 1)) examples = false;
    }
    suite.checks.push_back({"search reproduces the worked four-element runs", examples});

    bool homid_agree = true;
    for (const auto& f : rels)
        for (int rho = 0; rho < 2; ++rho)
            for (int sigma = 0; sigma < 2; ++sigma) {
                const auto out = grouphomid_run(f, p22, p22, rho, sigma);
                if (!out.simplified_agrees) homid_agree = false;
                if (out.scalar == Scalar::one &&
                    !(out.output_state == classical_states(p22.X)[sigma]))
                    homid_agree = false;
            }
    suite.checks.push_back(
        {"hom identification composite equals its simplified form", homid_agree});

    bool iso_all = true;
    const std::vector<Rel> isos = {
        Rel::identity(4), Rel::from_pairs(4, 4, {{2, 0}, {3, 1}, {0, 2}, {1, 3}})};
    for (const Rel& iso : isos) {
        const auto f = make_classical(iso, z2z2, z2z2);
        std::set<int> possible;
        for (int sigma = 0; sigma < 2; ++sigma) {
            const auto out = grouphomid_run(f, p22, p22, 0, sigma);
            for (const auto& [r, ok] : out.possible_classical_outcomes)
                if (ok) possible.insert(r);
        }
        if (possible.size() != 2) iso_all = false;
    }
    suite.checks.push_back({"isomorphisms make every classical state possible", iso_all});

    suite.elapsed_ms = timer.ms();
    return suite;
}

SuiteResult run_suite_fourier() {
    Timer timer;
    SuiteResult suite{"fourier", {}, 0.0};
    std::mt19937 rng(kSeed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);

    const auto random_fn = [&](const FiniteAbelianGroup& G) {
        std::vector<Complex> v(G.order());
        for (auto& x : v) x = Complex(coord(rng), coord(rng));
        return GroupFunction(G, std::move(v));
    };

    bool inversion = true;
    for (const auto& G : abelian_groups_up_to(16)) {
        for (int i = 0; i < 100; ++i) {
            const GroupFunction f = random_fn(G);
            if (max_abs_diff(inverse_fourier(fourier_transform(f)), f) >= kTol) inversion = false;
        }
    }
    suite.checks.push_back({"inverse transform undoes the transform", inversion});

    bool convolution = true;
    for (const auto& G : abelian_groups_up_to(24)) {
        for (int i = 0; i < 5; ++i)
            if (convolution_theorem_error(random_fn(G), random_fn(G)) >= kTol)
                convolution = false;
    }
    suite.checks.push_back({"transform turns convolution into pointwise product", convolution});

    bool orthogonality = true;
    for (const auto& G : abelian_groups_up_to(24))
        if (character_orthogonality_check(G) >= kTol) orthogonality = false;
    suite.checks.push_back({"characters are orthogonal", orthogonality});

    bool qubit_exact = true;
    {
        const ComplexMatrix h1 = fourier_matrix(FiniteAbelianGroup({2}));
        const ComplexMatrix expect = [] {
            ComplexMatrix m(2, 2);
            m.at(0, 0) = 1.0;
            m.at(0, 1) = 1.0;
            m.at(1, 0) = 1.0;
            m.at(1, 1) = -1.0;
            return m;
        }();
        if (max_abs_diff(h1, expect) != 0.0) qubit_exact = false;
        ComplexMatrix power = h1;
        std::vector<int> factors = {2};
        for (int n = 2; n <= 4; ++n) {
            power = kron(power, h1);
            factors.push_back(2);
            if (max_abs_diff(fourier_matrix(FiniteAbelianGroup(factors)), power) != 0.0)
                qubit_exact = false;
        }
    }
    suite.checks.push_back({"qubit matrices are exact sign tensors", qubit_exact});

    bool unitary = true;
    for (const auto& G : abelian_groups_up_to(24))
        if (fourier_matrix_unitarity_error(fourier_matrix(G)) >= kTol) unitary = false;
    suite.checks.push_back({"scaled matrices are unitary", unitary});

    bool counts = true;
    {
        std::vector<FiniteAbelianGroup> grid;
        const std::vector<int> allowed = {2, 3, 4, 8, 9};
        std::vector<int> cur;
        auto rec = [&](auto&& self, std::size_t start, long long product) -> void {
            if (!cur.empty()) grid.push_back(FiniteAbelianGroup(cur));
            for (std::size_t i = start; i < allowed.size(); ++i) {
                if (product * allowed[i] > 36) continue;
                cur.push_back(allowed[i]);
                self(self, i, product * allowed[i]);
                cur.pop_back();
            }
        };
        rec(rec, 0, 1);
        for (const auto& G : grid)
            for (const auto& A : grid)
                if (count_homs_by_enumeration(G, A) != count_homs_formula(G, A)) counts = false;
    }
    suite.checks.push_back({"hom counts by enumeration match the factor formula", counts});

    bool identify = true;
    {
        const std::vector<std::pair<FiniteAbelianGroup, FiniteAbelianGroup>> cases = {
            {FiniteAbelianGroup({6}), FiniteAbelianGroup({4})},
            {FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({2, 4})},
            {FiniteAbelianGroup({2, 2, 2}), FiniteAbelianGroup({2})},
            {FiniteAbelianGroup({9}), FiniteAbelianGroup({3})},
        };
        for (const auto& [G, A] : cases) {
            for (const auto& hom : enumerate_homs(G, A)) {
                QuantumOracle oracle(hom);
                const IdentifyResult res = grouphomid_identify(G, A, oracle);
                if (res.table.image != hom.image) identify = false;
                if (res.query_count != static_cast<int>(A.factors.size())) identify = false;
                for (const auto& probs : res.probabilities) {
                    int units = 0;
                    for (double p : probs) {
                        if (std::abs(p - 1.0) < kTol)
                            ++units;
                        else if (p >= kTol)
                            identify = false;
                    }
                    if (units != 1) identify = false;
                }
            }
        }
    }
    suite.checks.push_back({"hidden homomorphisms are recovered, one query per factor", identify});

    bool amplitude = true;
    {
        const FiniteAbelianGroup g22({2, 2}), z2({2});
        const GroupHomTable constant{g22, z2, {0, 0, 0, 0}};
        if (std::abs(std::abs(dj_amplitude(constant, 1)) - 1.0) >= kTol) amplitude = false;
        const GroupHomTable balanced{g22, z2, {0, 0, 1, 1}};
        if (std::abs(dj_amplitude(balanced, 1)) >= kTol) amplitude = false;
        const GroupHomTable projection{g22, z2, {0, 1, 0, 1}};
        if (std::abs(dj_amplitude(projection, 1)) >= kTol) amplitude = false;
    }
    suite.checks.push_back({"amplitudes classify constant and balanced functions", amplitude});

    suite.elapsed_ms = timer.ms();
    return suite;
}

std::vector<SuiteResult> run_suites(const std::string& which, bool inject_mutation) {
    std::vector<SuiteResult> out;
    const bool all = which == "all";
    bool known = all;
    if (all || which == "rel") out.push_back(run_suite_rel()), known = true;
    if (all || which == "groupoid") out.push_back(run_suite_groupoid(inject_mutation)), known = true;
    if (all || which == "comp") out.push_back(run_suite_comp()), known = true;
    if (all || which == "classrel") out.push_back(run_suite_classrel()), known = true;
    if (all || which == "qcalg") out.push_back(run_suite_qcalg()), known = true;
    if (all || which == "fourier") out.push_back(run_suite_fourier()), known = true;
    if (!known) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace qcrel
