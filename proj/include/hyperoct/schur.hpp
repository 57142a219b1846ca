#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hyperoct/errors.hpp"
#include "hyperoct/numbers.hpp"
#include "hyperoct/partition.hpp"

namespace hyperoct {

// An element of the ring of symmetric functions written in the Schur basis:
// a finite map from partitions to nonzero exact integer coefficients. The
// zero element is the empty map. Expansions may be inhomogeneous.
class SchurExpansion {
public:
    using TermMap = std::map<Partition, Int>;

    SchurExpansion() = default;

    static SchurExpansion basis(const Partition& p) {
        SchurExpansion f;
        f.terms_.emplace(p, 1);
        return f;
    }

    static SchurExpansion unit() { return basis(Partition()); }

    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    // max |lambda| over the support; nullopt for the zero element.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [p, c] : terms_)
            if (!d || p.size() > *d) d = p.size();
        return d;
    }

    Int coefficient(const Partition& p) const {
        const auto it = terms_.find(p);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // Accumulate c * s_p; zero totals are erased so the no-zero-coefficients
    // invariant holds at all times.
    void add_term(const Partition& p, const Int& c) {
        if (c == 0) return;
        const auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const SchurExpansion&) const = default;

private:
    TermMap terms_;
};

inline SchurExpansion schur(const Partition& p) { return SchurExpansion::basis(p); }

inline SchurExpansion add(const SchurExpansion& f, const SchurExpansion& g) {
    SchurExpansion out = f;
    for (const auto& [p, c] : g.terms()) out.add_term(p, c);
    return out;
}

inline SchurExpansion scale(const SchurExpansion& f, const Int& c) {
    SchurExpansion out;
    if (c == 0) return out;
    for (const auto& [p, coeff] : f.terms()) out.add_term(p, coeff * c);
    return out;
}

// <f, s_p> under the standard inner product (Schur functions orthonormal).
inline Int coefficient(const SchurExpansion& f, const Partition& p) {
    return f.coefficient(p);
}

// Phi(sum c_lambda s_lambda) = max over the support of lambda_1.
// Total on nonzero expansions only.
inline int phi(const SchurExpansion& f) {
    if (f.is_zero()) throw ZeroElement("phi of the zero expansion");
    int best = 0;
    for (const auto& [p, c] : f.terms()) best = std::max(best, p.first());
    return best;
}

// omega(s_lambda) = s_{lambda'}: conjugate every key, coefficients unchanged.
inline SchurExpansion omega(const SchurExpansion& f) {
    SchurExpansion out;
    for (const auto& [p, c] : f.terms()) out.add_term(conjugate(p), c);
    return out;
}

// h_k = s_(k); e_k = s_(1^k); k = 0 gives the unit.
inline SchurExpansion complete_to_schur(int k) {
    if (k < 0) throw InvalidArgument("complete_to_schur: negative degree");
    if (k == 0) return SchurExpansion::unit();
    return schur(Partition({k}));
}

inline SchurExpansion elementary_to_schur(int k) {
    if (k < 0) throw InvalidArgument("elementary_to_schur: negative degree");
    return schur(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
}

namespace detail {

// Littlewood-Richardson tableau enumeration.
//
// Grows `base` by horizontal strips of sizes content_1, content_2, ... where
// the strip for value v obeys the lattice prefix condition: in every row
// prefix, the cells of value v placed so far never outnumber the cells of
// value v-1 placed strictly higher. Each completed filling is one LR tableau;
// `emit` receives its final shape. When `bound` is non-null every
// intermediate shape is kept inside it, which prunes exact-coefficient
// queries without changing any count (shapes only ever grow).
class LrEnumerator {
public:
    LrEnumerator(const Partition& base, const Partition& content,
                 const Partition* bound,
                 const std::function<void(const std::vector<int>&)>& emit)
        : content_(content), bound_(bound), emit_(emit) {
        const std::size_t rows =
            static_cast<std::size_t>(base.length() + content.length()) + 1;
        shape_.assign(rows, 0);
        for (int i = 0; i < base.length(); ++i)
            shape_[static_cast<std::size_t>(i)] = base.row(i);
        old_shape_ = shape_;
        prev_added_.assign(rows, 0);
        cur_added_.assign(rows, 0);
    }

    void run() { place_value(0); }

private:
    void place_value(int v) {
        if (v == content_.length()) {
            emit_(shape_);
            return;
        }
        old_shape_ = shape_;
        place_row(v, 0, content_.row(v), 0, 0);
    }

    void place_row(int v, std::size_t r, int remaining, int prev_cum, int cur_cum) {
        if (r == shape_.size()) {
            if (remaining == 0) finish_strip(v);
            return;
        }
        // Horizontal strip: the new length of row r may not exceed the old
        // length of row r-1. The first strip has no lattice constraint.
        int cap = (r == 0) ? shape_[r] + remaining
                           : std::min(old_shape_[r - 1], shape_[r] + remaining);
        if (bound_ != nullptr)
            cap = std::min(cap, bound_->row(static_cast<int>(r)));
        int max_add = cap - shape_[r];
        if (v > 0) max_add = std::min(max_add, prev_cum - cur_cum);

        const int next_prev_cum = prev_cum + prev_added_[r];
        for (int a = std::min(max_add, remaining); a >= 0; --a) {
            shape_[r] += a;
            cur_added_[r] = a;
            place_row(v, r + 1, remaining - a, next_prev_cum, cur_cum + a);
            shape_[r] -= a;
            cur_added_[r] = 0;
        }
    }

    void finish_strip(int v) {
        std::swap(prev_added_, cur_added_);
        std::vector<int> saved = cur_added_;   // the older strip, to restore
        cur_added_.assign(cur_added_.size(), 0);
        place_value(v + 1);
        cur_added_ = std::move(saved);
        std::swap(prev_added_, cur_added_);
    }

    const Partition& content_;
    const Partition* bound_;
    const std::function<void(const std::vector<int>&)>& emit_;
    std::vector<int> shape_;
    std::vector<int> old_shape_;
    std::vector<int> prev_added_;   // cells added per row by the previous value
    std::vector<int> cur_added_;
};

inline Partition partition_from_rows(const std::vector<int>& rows) {
    std::vector<int> parts;
    for (int x : rows) {
        if (x == 0) break;
        parts.push_back(x);
    }
    return Partition(std::move(parts));
}

// s_a * s_b as a term map, memoized per thread. The enumeration uses the
// smaller partition as tableau content.
inline const std::map<Partition, Int>& lr_basis_product(const Partition& a,
                                                        const Partition& b) {
    thread_local std::map<std::pair<Partition, Partition>, std::map<Partition, Int>> memo;
    const bool a_first = a <= b;
    const std::pair<Partition, Partition> key =
        a_first ? std::make_pair(a, b) : std::make_pair(b, a);
    const auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const bool b_is_content =
        (b.size() < a.size()) || (b.size() == a.size() && b.length() <= a.length());
    const Partition& base = b_is_content ? a : b;
    const Partition& content = b_is_content ? b : a;

    std::map<Partition, Int> result;
    LrEnumerator(base, content, nullptr, [&result](const std::vector<int>& rows) {
        result[partition_from_rows(rows)] += 1;
    }).run();
    return memo.emplace(key, std::move(result)).first->second;
}

// c_{a,b}^{target}: counts LR tableaux of shape target/base and content equal
// to the smaller factor, with every intermediate shape bounded by target.
inline Int lr_coefficient(const Partition& a, const Partition& b,
                          const Partition& target) {
    if (a.size() + b.size() != target.size()) return 0;
    const bool b_is_content =
        (b.size() < a.size()) || (b.size() == a.size() && b.length() <= a.length());
    const Partition& base = b_is_content ? a : b;
    const Partition& content = b_is_content ? b : a;
    if (!target.contains(base)) return 0;

    Int count = 0;
    LrEnumerator(base, content, &target, [&count](const std::vector<int>&) {
        // Bounded enumeration with matching cell totals can only finish at
        // the target shape itself.
        count += 1;
    }).run();
    return count;
}

}  // namespace detail

// The product in the ring of symmetric functions, bilinear over the
// Littlewood-Richardson rule on basis elements.
inline SchurExpansion lr_multiply(const SchurExpansion& f, const SchurExpansion& g) {
    SchurExpansion out;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            const Int cab = ca * cb;
            for (const auto& [nu, mult] : detail::lr_basis_product(a, b))
                out.add_term(nu, cab * mult);
        }
    }
    return out;
}

// <f * g, s_target> without materializing the product: the same bilinear sum,
// restricted to the pairs that can reach the target shape.
inline Int product_coefficient(const SchurExpansion& f, const SchurExpansion& g,
                               const Partition& target) {
    Int total = 0;
    for (const auto& [a, ca] : f.terms()) {
        if (a.size() > target.size() || !target.contains(a)) continue;
        for (const auto& [b, cb] : g.terms()) {
            if (a.size() + b.size() != target.size()) continue;
            total += ca * cb * detail::lr_coefficient(a, b, target);
        }
    }
    return total;
}

enum class GeneratorKind { complete, elementary };

// A signed formal sum of products of h- or e-generators, e.g. the expanded
// Jacobi-Trudi determinant h_2*h_1 - h_3. Each product is a multiset of
// generator degrees (stored sorted descending); all products in one
// expansion share the same total degree.
class HomogeneousSymbolProduct {
public:
    using TermMap = std::map<std::vector<int>, Int>;

    HomogeneousSymbolProduct(GeneratorKind kind, int degree)
        : kind_(kind), degree_(degree) {}

    GeneratorKind kind() const { return kind_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }

    void add_product(std::vector<int> degrees, const Int& c) {
        if (c == 0) return;
        std::sort(degrees.begin(), degrees.end(), std::greater<int>());
        const auto [it, inserted] = terms_.emplace(std::move(degrees), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const HomogeneousSymbolProduct&) const = default;

private:
    GeneratorKind kind_;
    int degree_;
    TermMap terms_;
};

namespace detail {

// Full permutation expansion of det M where entry_degree(i, j) names the
// generator index of M[i][j]. Terms containing a negative index vanish;
// index 0 is the unit and is dropped from the product.
template <typename EntryDegree>
inline void expand_determinant(int size, EntryDegree entry_degree,
                               HomogeneousSymbolProduct& out) {
    std::vector<int> cols(static_cast<std::size_t>(size));
    std::vector<bool> used(static_cast<std::size_t>(size), false);
    std::vector<int> degrees;

    const std::function<void(int, int)> rec = [&](int row, int sign) {
        if (row == size) {
            out.add_product(degrees, sign);
            return;
        }
        int used_below = 0;
        for (int j = 0; j < size; ++j) {
            if (used[static_cast<std::size_t>(j)]) {
                ++used_below;
                continue;
            }
            const int d = entry_degree(row, j);
            if (d >= 0) {
                used[static_cast<std::size_t>(j)] = true;
                const std::size_t mark = degrees.size();
                if (d > 0) degrees.push_back(d);
                // inversions added: earlier rows already sitting in columns > j
                const int inversions = row - used_below;
                rec(row + 1, (inversions % 2 == 0) ? sign : -sign);
                degrees.resize(mark);
                used[static_cast<std::size_t>(j)] = false;
            }
        }
    };
    rec(0, 1);
}

}  // namespace detail

// s_p = det(h_{p_i + j - i}) expanded into h-generator products.
inline HomogeneousSymbolProduct jacobi_trudi_h(const Partition& p) {
    HomogeneousSymbolProduct out(GeneratorKind::complete, p.size());
    detail::expand_determinant(
        p.length(), [&p](int i, int j) { return p.row(i) + j - i; }, out);
    return out;
}

// Dual form s_p = det(e_{p'_j + i - j}) expanded into e-generator products.
inline HomogeneousSymbolProduct jacobi_trudi_e(const Partition& p) {
    const Partition conj = conjugate(p);
    HomogeneousSymbolProduct out(GeneratorKind::elementary, p.size());
    detail::expand_determinant(
        conj.length(), [&conj](int i, int j) { return conj.row(j) + i - j; }, out);
    return out;
}

// Substitute an image for every generator and multiply out. Factors are
// multiplied smallest degree first so the large factor enters last.
inline SchurExpansion evaluate(const HomogeneousSymbolProduct& f,
                               const std::function<SchurExpansion(int)>& image) {
    SchurExpansion out;
    for (const auto& [degrees, c] : f.terms()) {
        SchurExpansion prod = SchurExpansion::unit();
        for (auto it = degrees.rbegin(); it != degrees.rend(); ++it)
            prod = lr_multiply(prod, image(*it));
        out = add(out, scale(prod, c));
    }
    return out;
}

// Substitution by the generators themselves; reproduces schur(p) on
// Jacobi-Trudi input.
inline SchurExpansion evaluate(const HomogeneousSymbolProduct& f) {
    if (f.kind() == GeneratorKind::complete)
        return evaluate(f, [](int k) { return complete_to_schur(k); });
    return evaluate(f, [](int k) { return elementary_to_schur(k); });
}

}  // namespace hyperoct
