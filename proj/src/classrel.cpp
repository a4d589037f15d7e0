#include "qcrel/classrel.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <thread>

namespace qcrel {

bool is_monoid_hom_rel(const Rel& R, const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B) {
    if (R.dom_size() != Z_A.carrier_size() || R.cod_size() != Z_B.carrier_size())
        throw size_error("monoid hom: relation sizes must match the groupoids");
    return is_groupoid_hom_rel(R, Z_A, Z_B) && compose(R, unit_rel(Z_A)) == unit_rel(Z_B);
}

bool is_groupoid_hom_rel(const Rel& R, const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B) {
    if (R.dom_size() != Z_A.carrier_size() || R.cod_size() != Z_B.carrier_size())
        throw size_error("groupoid hom: relation sizes must match the groupoids");
    return compose(R, mult_rel(Z_A)) == compose(mult_rel(Z_B), tensor(R, R));
}

bool is_object_surjective(const Rel& R, const AbelianGroupoid& Z_B) {
    const Subset img = R.image(Subset::full(R.dom_size()));
    for (const auto& comp : classical_states(Z_B))
        if (!img.intersects(comp)) return false;
    return true;
}

bool is_classical_relation(const Rel& f, const AbelianGroupoid& Z_A,
                           const AbelianGroupoid& Z_B) {
    if (f.dom_size() != Z_A.carrier_size() || f.cod_size() != Z_B.carrier_size())
        throw size_error("classical relation: sizes must match the groupoids");
    return is_monoid_hom_rel(converse(f), Z_B, Z_A);
}

ClassicalRelation make_classical(const Rel& f, const AbelianGroupoid& Z_A,
                                 const AbelianGroupoid& Z_B) {
    if (!is_classical_relation(f, Z_A, Z_B))
        throw std::invalid_argument("relation is not classical for these groupoids");
    return ClassicalRelation{f, Z_A, Z_B};
}

namespace {

// Converse-side monoid homomorphism test on a packed candidate mask.
// Bit a*nB + b of the mask encodes the pair (a, b). Works entirely on small
// bitmasks so the exhaustive scans stay cheap.
struct MaskChecker {
    int nA, nB;
    std::vector<std::vector<int>> multB;  // -1 when undefined
    std::vector<std::vector<int>> multA;
    std::uint64_t idA_mask = 0, idB_mask = 0;
    bool unit_pruning;

    MaskChecker(const AbelianGroupoid& Z_A, const AbelianGroupoid& Z_B, bool pruning)
        : nA(Z_A.carrier_size()), nB(Z_B.carrier_size()), unit_pruning(pruning) {
        multA.assign(nA, std::vector<int>(nA, -1));
        multB.assign(nB, std::vector<int>(nB, -1));
        for (int x = 0; x < nA; ++x)
            for (int y = 0; y < nA; ++y)
                if (auto m = Z_A.mult(x, y)) multA[x][y] = *m;
        for (int x = 0; x < nB; ++x)
            for (int y = 0; y < nB; ++y)
                if (auto m = Z_B.mult(x, y)) multB[x][y] = *m;
        for (int e : Z_A.identity_set()) idA_mask |= std::uint64_t{1} << e;
        for (int e : Z_B.identity_set()) idB_mask |= std::uint64_t{1} << e;
    }

    // set-extended product over Z_A of two subsets of A
    std::uint64_t mult_set_A(std::uint64_t s, std::uint64_t t) const {
        std::uint64_t out = 0;
        for (int u = 0; u < nA; ++u) {
            if (!((s >> u) & 1)) continue;
            for (int v = 0; v < nA; ++v)
                if ((t >> v) & 1 && multA[u][v] >= 0) out |= std::uint64_t{1} << multA[u][v];
        }
        return out;
    }

    bool accepts(std::uint64_t mask) const {
        // cols[b] = f^-1(b) as a mask over A
        std::uint64_t cols[64] = {};
        std::uint64_t preimage_of_idB = 0;
        for (int a = 0; a < nA; ++a) {
            std::uint64_t row = (mask >> (a * nB)) & ((std::uint64_t{1} << nB) - 1);
            while (row) {
                int b = std::countr_zero(row);
                row &= row - 1;
                cols[b] |= std::uint64_t{1} << a;
                if ((idB_mask >> b) & 1) preimage_of_idB |= std::uint64_t{1} << a;
            }
        }
        if (preimage_of_idB != idA_mask) return false;
        // converse multiplicativity: f^-1(x *_B y) = f^-1(x) *_A f^-1(y)
        for (int x = 0; x < nB; ++x)
            for (int y = 0; y < nB; ++y) {
                const std::uint64_t lhs = multB[x][y] >= 0 ? cols[multB[x][y]] : 0;
                if (lhs != mult_set_A(cols[x], cols[y])) return false;
            }
        return true;
    }

    // unit-condition-only test, usable as a cheap prefilter
    bool unit_ok(std::uint64_t mask) const {
        std::uint64_t preimage_of_idB = 0;
        for (int a = 0; a < nA; ++a) {
            const std::uint64_t row = (mask >> (a * nB)) & ((std::uint64_t{1} << nB) - 1);
            if (row & idB_mask) preimage_of_idB |= std::uint64_t{1} << a;
        }
        return preimage_of_idB == idA_mask;
    }
};

std::vector<std::uint64_t> scan_range(const MaskChecker& chk, std::uint64_t lo,
                                      std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (chk.unit_pruning && !chk.unit_ok(mask)) continue;
        if (chk.accepts(mask)) out.push_back(mask);
    }
    return out;
}

}  // namespace

std::vector<ClassicalRelation> enumerate_classical_relations(const AbelianGroupoid& Z_A,
                                                             const AbelianGroupoid& Z_B,
                                                             int cap_bits, bool parallel,
                                                             bool unit_pruning) {
    const int nA = Z_A.carrier_size(), nB = Z_B.carrier_size();
    const int bits = nA * nB;
    if (bits > cap_bits)
        throw cap_error("search space 2^" + std::to_string(bits) + " exceeds cap 2^" +
                        std::to_string(cap_bits));
    if (bits > 62) throw cap_error("search space exceeds the 2^62 hard limit");
    const MaskChecker chk(Z_A, Z_B, unit_pruning);
    const std::uint64_t total = std::uint64_t{1} << bits;

    std::vector<std::uint64_t> survivors;
    unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (workers <= 1 || total < 4096) {
        survivors = scan_range(chk, 0, total);
    } else {
        const std::uint64_t chunk = (total + workers - 1) / workers;
        std::vector<std::future<std::vector<std::uint64_t>>> futs;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async,
                                      [&chk, lo, hi] { return scan_range(chk, lo, hi); }));
        }
        for (auto& f : futs) {
            auto part = f.get();
            survivors.insert(survivors.end(), part.begin(), part.end());
        }
    }

    std::vector<ClassicalRelation> out;
    out.reserve(survivors.size());
    for (std::uint64_t mask : survivors) {
        std::vector<std::pair<int, int>> ps;
        for (int a = 0; a < nA; ++a)
            for (int b = 0; b < nB; ++b)
                if ((mask >> (a * nB + b)) & 1) ps.emplace_back(a, b);
        out.push_back(ClassicalRelation{Rel::from_pairs(nA, nB, ps), Z_A, Z_B});
    }
    std::sort(out.begin(), out.end(), [](const ClassicalRelation& x, const ClassicalRelation& y) {
        return x.rel.pairs() < y.rel.pairs();
    });
    return out;
}

bool is_self_conjugate(const ClassicalRelation& f) {
    const AbelianGroupoid& ZA = f.source_Z;
    const AbelianGroupoid& ZB = f.target_Z;
    const int nA = ZA.carrier_size(), nB = ZB.carrier_size();
    for (int e = 0; e < nB; ++e) {
        std::vector<int> direct_idx, conj_idx;
        for (int a = 0; a < nA; ++a) {
            if (f.rel.at(a, e)) direct_idx.push_back(a);
            if (f.rel.at(a, ZB.inverse(e))) conj_idx.push_back(ZA.inverse(a));
        }
        std::sort(direct_idx.begin(), direct_idx.end());
        std::sort(conj_idx.begin(), conj_idx.end());
        if (direct_idx != conj_idx) return false;
    }
    return true;
}

}  // namespace qcrel
