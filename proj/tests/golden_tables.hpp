#pragma once

// Frozen expected outputs for the three small enumeration instances and the
// worked four-element algorithm runs. Pair lists are unordered as written;
// compare after sorting.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "qcrel/classrel.hpp"
#include "qcrel/groupoid.hpp"

namespace golden {

using PairList = std::vector<std::pair<int, int>>;

inline qcrel::AbelianGroupoid instance_z3() {
    return qcrel::AbelianGroupoid({qcrel::FiniteAbelianGroup({3})});
}
inline qcrel::AbelianGroupoid instance_z4() {
    return qcrel::AbelianGroupoid({qcrel::FiniteAbelianGroup({4})});
}
inline qcrel::AbelianGroupoid instance_z2z2() {
    return qcrel::AbelianGroupoid(
        {qcrel::FiniteAbelianGroup({2}), qcrel::FiniteAbelianGroup({2})});
}

inline const std::vector<PairList>& z3_table() {
    static const std::vector<PairList> t = {
        {{0, 0}, {0, 1}, {0, 2}},
        {{0, 0}, {1, 1}, {2, 2}},
        {{0, 0}, {1, 2}, {2, 1}},
    };
    return t;
}

inline const std::vector<PairList>& z4_table() {
    static const std::vector<PairList> t = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
        {{0, 0}, {2, 1}, {0, 2}, {2, 3}},
        {{0, 0}, {3, 1}, {2, 2}, {1, 3}},
    };
    return t;
}

inline const std::vector<PairList>& z2z2_table() {
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

// the two constant relations of the two-component worked run
inline const std::vector<PairList>& z2z2_constants() {
    static const std::vector<PairList> t = {
        {{0, 0}, {0, 1}, {2, 0}, {2, 1}},
        {{0, 2}, {0, 3}, {2, 2}, {2, 3}},
    };
    return t;
}

// the four balanced relations of the same run
inline const std::vector<PairList>& z2z2_balanced() {
    static const std::vector<PairList> t = {
        {{0, 2}, {2, 2}, {1, 3}, {3, 3}},
        {{0, 0}, {1, 1}, {2, 2}, {3, 3}},
        {{2, 0}, {3, 1}, {0, 2}, {1, 3}},
        {{0, 0}, {2, 0}, {1, 1}, {3, 1}},
    };
    return t;
}

inline std::set<PairList> as_sorted_set(const std::vector<PairList>& tables) {
    std::set<PairList> out;
    for (PairList t : tables) {
        std::sort(t.begin(), t.end());
        out.insert(std::move(t));
    }
    return out;
}

inline std::set<PairList> enumerated_set(const std::vector<qcrel::ClassicalRelation>& rels) {
    std::set<PairList> out;
    for (const auto& r : rels) out.insert(r.rel.pairs());
    return out;
}

}  // namespace golden
