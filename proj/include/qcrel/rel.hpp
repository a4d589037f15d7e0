#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcrel {

// Thrown when relation or subset dimensions do not line up.
struct size_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A finite set: a size plus distinct display labels.
struct FinSet {
    int size;
    std::vector<std::string> labels;

    explicit FinSet(int n);
    FinSet(int n, std::vector<std::string> labels);
};

// Possibilistic scalar: the two scalars of the relational model.
enum class Scalar { zero, one };

inline Scalar scalar_and(Scalar a, Scalar b) {
    return (a == Scalar::one && b == Scalar::one) ? Scalar::one : Scalar::zero;
}

// A subset of a finite set, stored as a bitmask.
class Subset {
public:
    Subset() : parent_(0) {}
    explicit Subset(int parent_size);
    static Subset from_indices(int parent_size, const std::vector<int>& idx);
    static Subset full(int parent_size);

    int parent_size() const { return parent_; }
    bool contains(int i) const;
    int count() const;
    bool is_empty() const;
    bool intersects(const Subset& other) const;
    std::vector<int> indices() const;

    Subset set_union(const Subset& other) const;
    Subset set_intersection(const Subset& other) const;

    bool operator==(const Subset& other) const;
    bool operator<(const Subset& other) const;  // lexicographic by sorted indices

    const std::vector<std::uint64_t>& words() const { return mask_; }

private:
    friend class Rel;
    void add(int i);
    int parent_;
    std::vector<std::uint64_t> mask_;
};

// A relation A -> B as a dense boolean incidence matrix.
// Row b holds the domain elements related to codomain element b.
// Values are immutable after construction; equality is matrix equality.
class Rel {
public:
    Rel(int dom_size, int cod_size);

    static Rel identity(int n);
    static Rel empty(int dom_size, int cod_size);
    static Rel full(int dom_size, int cod_size);
    // pairs are (a, b) meaning a R b
    static Rel from_pairs(int dom_size, int cod_size,
                          const std::vector<std::pair<int, int>>& pairs);
    template <typename Pred>
    static Rel from_predicate(int dom_size, int cod_size, Pred pred) {
        Rel r(dom_size, cod_size);
        for (int b = 0; b < cod_size; ++b)
            for (int a = 0; a < dom_size; ++a)
                if (pred(a, b)) r.set(a, b);
        return r;
    }

    int dom_size() const { return dom_; }
    int cod_size() const { return cod_; }
    bool at(int a, int b) const;

    // canonical listing: sorted lexicographically by (domain, codomain) index
    std::vector<std::pair<int, int>> pairs() const;
    int pair_count() const;

    Subset image(const Subset& s) const;     // {b | exists a in s with a R b}
    Subset preimage(const Subset& s) const;  // {a | exists b in s with a R b}

    bool operator==(const Rel& other) const;
    bool operator!=(const Rel& other) const { return !(*this == other); }

private:
    friend Rel compose(const Rel&, const Rel&);
    friend Rel converse(const Rel&);
    friend Rel tensor(const Rel&, const Rel&);
    friend Rel union_rel(const Rel&, const Rel&);
    friend Rel sym_diff(const Rel&, const Rel&);
    friend Rel state_rel(const Subset&);
    friend Rel density_matrix(const Subset&);
    friend Rel swap_rel(int, int);

    void set(int a, int b);
    int words_per_row() const;
    int dom_, cod_;
    std::vector<std::uint64_t> bits_;  // cod_ rows, each words_per_row() words over dom_
};

// g after f: requires f.cod_size == g.dom_size
Rel compose(const Rel& g, const Rel& f);
Rel converse(const Rel& f);
// product encoding: element (a, c) of A x C has index a*|C| + c
Rel tensor(const Rel& f, const Rel& g);
Rel union_rel(const Rel& f, const Rel& g);
Rel sym_diff(const Rel& f, const Rel& g);

// true iff both composites with the converse are identities
bool is_bijection(const Rel& f);
// independent formulation: every row and column has exactly one entry
bool is_bijection_by_counts(const Rel& f);

// one iff the two subsets intersect
Scalar born_scalar(const Subset& effect, const Subset& state);

// |s> as a relation {*} -> A, and <s| = its converse
Rel state_rel(const Subset& s);
Rel effect_rel(const Subset& s);

// the permutation A x B -> B x A
Rel swap_rel(int size_a, int size_b);

// printed form "{(0,1),(2,3)}" in canonical pair order; "{}" when empty
std::string to_string(const Rel& f);
std::string to_string(const Subset& s);

}  // namespace qcrel
