#include "qcrel/rel.hpp"

#include <algorithm>
#include <bit>

namespace qcrel {

namespace {
int word_count(int bits) { return (bits + 63) / 64; }
}  // namespace

FinSet::FinSet(int n) : size(n) {
    if (n < 1) throw size_error("FinSet size must be >= 1");
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
}

FinSet::FinSet(int n, std::vector<std::string> ls) : size(n), labels(std::move(ls)) {
    if (n < 1) throw size_error("FinSet size must be >= 1");
    if (static_cast<int>(labels.size()) != n)
        throw size_error("FinSet label count must equal size");
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw size_error("FinSet labels must be pairwise distinct");
}

Subset::Subset(int parent_size) : parent_(parent_size), mask_(word_count(parent_size), 0) {
    if (parent_size < 0) throw size_error("Subset parent size must be >= 0");
}

Subset Subset::from_indices(int parent_size, const std::vector<int>& idx) {
    Subset s(parent_size);
    for (int i : idx) {
        if (i < 0 || i >= parent_size) throw size_error("Subset index out of range");
        s.add(i);
    }
    return s;
}

Subset Subset::full(int parent_size) {
    Subset s(parent_size);
    for (int i = 0; i < parent_size; ++i) s.add(i);
    return s;
}

void Subset::add(int i) { mask_[i >> 6] |= std::uint64_t{1} << (i & 63); }

bool Subset::contains(int i) const {
    if (i < 0 || i >= parent_) return false;
    return (mask_[i >> 6] >> (i & 63)) & 1;
}

int Subset::count() const {
    int c = 0;
    for (auto w : mask_) c += std::popcount(w);
    return c;
}

bool Subset::is_empty() const {
    for (auto w : mask_)
        if (w) return false;
    return true;
}

bool Subset::intersects(const Subset& other) const {
    if (parent_ != other.parent_) throw size_error("Subset parent sizes differ");
    for (size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] & other.mask_[i]) return true;
    return false;
}

std::vector<int> Subset::indices() const {
    std::vector<int> out;
    for (int i = 0; i < parent_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

Subset Subset::set_union(const Subset& other) const {
    if (parent_ != other.parent_) throw size_error("Subset parent sizes differ");
    Subset s(parent_);
    for (size_t i = 0; i < mask_.size(); ++i) s.mask_[i] = mask_[i] | other.mask_[i];
    return s;
}

Subset Subset::set_intersection(const Subset& other) const {
    if (parent_ != other.parent_) throw size_error("Subset parent sizes differ");
    Subset s(parent_);
    for (size_t i = 0; i < mask_.size(); ++i) s.mask_[i] = mask_[i] & other.mask_[i];
    return s;
}

bool Subset::operator==(const Subset& other) const {
    return parent_ == other.parent_ && mask_ == other.mask_;
}

bool Subset::operator<(const Subset& other) const {
    return indices() < other.indices();
}

Rel::Rel(int dom_size, int cod_size) : dom_(dom_size), cod_(cod_size) {
    if (dom_size < 0 || cod_size < 0) throw size_error("Rel sizes must be >= 0");
    bits_.assign(static_cast<size_t>(cod_) * words_per_row(), 0);
}

int Rel::words_per_row() const { return word_count(dom_); }

void Rel::set(int a, int b) {
    bits_[static_cast<size_t>(b) * words_per_row() + (a >> 6)] |= std::uint64_t{1}
                                                                  << (a & 63);
}

bool Rel::at(int a, int b) const {
    if (a < 0 || a >= dom_ || b < 0 || b >= cod_) throw size_error("Rel index out of range");
    return (bits_[static_cast<size_t>(b) * words_per_row() + (a >> 6)] >> (a & 63)) & 1;
}

Rel Rel::identity(int n) {
    Rel r(n, n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
}

Rel Rel::empty(int dom_size, int cod_size) { return Rel(dom_size, cod_size); }

Rel Rel::full(int dom_size, int cod_size) {
    Rel r(dom_size, cod_size);
    for (int b = 0; b < cod_size; ++b)
        for (int a = 0; a < dom_size; ++a) r.set(a, b);
    return r;
}

Rel Rel::from_pairs(int dom_size, int cod_size,
                    const std::vector<std::pair<int, int>>& pairs) {
    Rel r(dom_size, cod_size);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= dom_size || b < 0 || b >= cod_size)
            throw size_error("Rel pair out of range");
        r.set(a, b);
    }
    return r;
}

std::vector<std::pair<int, int>> Rel::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < dom_; ++a)
        for (int b = 0; b < cod_; ++b)
            if (at(a, b)) out.emplace_back(a, b);
    return out;
}

int Rel::pair_count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
}

Subset Rel::image(const Subset& s) const {
    if (s.parent_size() != dom_) throw size_error("image: subset parent must equal dom");
    Subset out(cod_);
    const int wpr = words_per_row();
    for (int b = 0; b < cod_; ++b) {
        for (int w = 0; w < wpr; ++w) {
            if (bits_[static_cast<size_t>(b) * wpr + w] & s.words()[w]) {
                out.add(b);
                break;
            }
        }
    }
    return out;
}

Subset Rel::preimage(const Subset& s) const { return converse(*this).image(s); }

bool Rel::operator==(const Rel& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && bits_ == other.bits_;
}

Rel compose(const Rel& g, const Rel& f) {
    if (f.cod_ != g.dom_) throw size_error("compose: inner sizes differ");
    Rel r(f.dom_, g.cod_);
    const int wpr_f = f.words_per_row();
    for (int c = 0; c < g.cod_; ++c) {
        std::uint64_t* row_out = &r.bits_[static_cast<size_t>(c) * wpr_f];
        for (int b = 0; b < g.dom_; ++b) {
            if (!g.at(b, c)) continue;
            const std::uint64_t* row_f = &f.bits_[static_cast<size_t>(b) * wpr_f];
            for (int w = 0; w < wpr_f; ++w) row_out[w] |= row_f[w];
        }
    }
    return r;
}

Rel converse(const Rel& f) {
    Rel r(f.cod_, f.dom_);
    for (int b = 0; b < f.cod_; ++b)
        for (int a = 0; a < f.dom_; ++a)
            if (f.at(a, b)) r.set(b, a);
    return r;
}

Rel tensor(const Rel& f, const Rel& g) {
    Rel r(f.dom_ * g.dom_, f.cod_ * g.cod_);
    for (int b = 0; b < f.cod_; ++b) {
        for (int a = 0; a < f.dom_; ++a) {
            if (!f.at(a, b)) continue;
            for (int d = 0; d < g.cod_; ++d)
                for (int c = 0; c < g.dom_; ++c)
                    if (g.at(c, d)) r.set(a * g.dom_ + c, b * g.cod_ + d);
        }
    }
    return r;
}

Rel union_rel(const Rel& f, const Rel& g) {
    if (f.dom_ != g.dom_ || f.cod_ != g.cod_) throw size_error("union: sizes differ");
    Rel r(f.dom_, f.cod_);
    for (size_t i = 0; i < f.bits_.size(); ++i) r.bits_[i] = f.bits_[i] | g.bits_[i];
    return r;
}

Rel sym_diff(const Rel& f, const Rel& g) {
    if (f.dom_ != g.dom_ || f.cod_ != g.cod_) throw size_error("sym_diff: sizes differ");
    Rel r(f.dom_, f.cod_);
    for (size_t i = 0; i < f.bits_.size(); ++i) r.bits_[i] = f.bits_[i] ^ g.bits_[i];
    return r;
}

bool is_bijection(const Rel& f) {
    Rel fc = converse(f);
    return compose(fc, f) == Rel::identity(f.dom_size()) &&
           compose(f, fc) == Rel::identity(f.cod_size());
}

bool is_bijection_by_counts(const Rel& f) {
    if (f.dom_size() != f.cod_size()) return false;
    std::vector<int> row(f.cod_size(), 0), col(f.dom_size(), 0);
    for (auto [a, b] : f.pairs()) {
        ++col[a];
        ++row[b];
    }
    for (int c : col)
        if (c != 1) return false;
    for (int r : row)
        if (r != 1) return false;
    return true;
}

Scalar born_scalar(const Subset& effect, const Subset& state) {
    if (effect.parent_size() != state.parent_size())
        throw size_error("born_scalar: parent sizes differ");
    return effect.intersects(state) ? Scalar::one : Scalar::zero;
}

Rel state_rel(const Subset& s) {
    Rel r(1, s.parent_size());
    for (int b = 0; b < s.parent_size(); ++b)
        if (s.contains(b)) r.set(0, b);
    return r;
}

Rel effect_rel(const Subset& s) { return converse(state_rel(s)); }

Rel swap_rel(int size_a, int size_b) {
    Rel r(size_a * size_b, size_b * size_a);
    for (int a = 0; a < size_a; ++a)
        for (int b = 0; b < size_b; ++b) r.set(a * size_b + b, b * size_a + a);
    return r;
}

std::string to_string(const Rel& f) {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : f.pairs()) {
        if (!first) out += ",";
        first = false;
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    out += "}";
    return out;
}

std::string to_string(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(i);
    }
    out += "}";
    return out;
}

}  // namespace qcrel
