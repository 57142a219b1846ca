#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "hyperoct/errors.hpp"
#include "hyperoct/numbers.hpp"

namespace hyperoct {

// An integer partition: a weakly decreasing sequence of positive parts.
// Canonical form stores no trailing zeros, so the empty partition is the
// unique size-0 value and equality / map ordering are unambiguous.
//
// Values are immutable after construction and safe to share across threads.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw InvalidPartition("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw InvalidPartition("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }

    // |lambda|: the number of cells.
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // l(lambda): the number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }

    bool is_empty() const { return parts_.empty(); }

    // Row i (0-based), 0 beyond the last row.
    int row(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    // lambda_1, or 0 for the empty partition.
    int first() const { return parts_.empty() ? 0 : parts_.front(); }

    // True iff other fits inside this diagram row by row.
    bool contains(const Partition& other) const {
        if (other.length() > length()) return false;
        for (int i = 0; i < other.length(); ++i)
            if (parts_[static_cast<std::size_t>(i)] < other.parts_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    bool is_strict() const {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] == parts_[i + 1]) return false;
        return true;
    }

    // Lexicographic on the part sequences; reverse iteration over a
    // map keyed this way yields the documented reverse-lexicographic order.
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Frobenius coordinates (a_1,...,a_r | b_1,...,b_r): arm and leg lengths at
// the diagonal cells. Both sequences are strictly decreasing and nonnegative,
// of equal length r (the Durfee rank).
struct FrobeniusCoordinates {
    std::vector<int> arms;
    std::vector<int> legs;

    bool operator==(const FrobeniusCoordinates&) const = default;
};

// Ordered pair of partitions labelling an irreducible representation of the
// hyperoctahedral group H_n (|lambda| + |mu| = n for concrete n); lambda
// carries the trivial Z/2Z-type, mu the sign type.
struct HIrrepLabel {
    Partition lambda;
    Partition mu;

    auto operator<=>(const HIrrepLabel&) const = default;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(static_cast<std::size_t>(p.first()));
    for (int j = 0; j < p.first(); ++j) {
        int count = 0;
        for (int i = 0; i < p.length(); ++i)
            if (p.row(i) > j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

// nu[n] = (n - |nu|, nu_1, nu_2, ...); requires n >= |nu| + nu_1.
inline Partition pad(const Partition& nu, int n) {
    if (n < nu.size() + nu.first())
        throw PadTooSmall("pad: need n >= |nu| + nu_1, got n = " + std::to_string(n));
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(nu.length()) + 1);
    parts.push_back(n - nu.size());
    parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
    return Partition(std::move(parts));
}

inline FrobeniusCoordinates to_frobenius(const Partition& p) {
    const Partition conj = conjugate(p);
    FrobeniusCoordinates fc;
    for (int i = 0; p.row(i) >= i + 1; ++i) {
        fc.arms.push_back(p.row(i) - (i + 1));
        fc.legs.push_back(conj.row(i) - (i + 1));
    }
    return fc;
}

inline Partition from_frobenius(const FrobeniusCoordinates& fc) {
    if (fc.arms.size() != fc.legs.size())
        throw InvalidFrobenius("arm and leg counts differ");
    auto strictly_decreasing_nonneg = [](const std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) return false;
            if (i + 1 < v.size() && v[i] <= v[i + 1]) return false;
        }
        return true;
    };
    if (!strictly_decreasing_nonneg(fc.arms) || !strictly_decreasing_nonneg(fc.legs))
        throw InvalidFrobenius("coordinates must be strictly decreasing and nonnegative");

    const int rank = static_cast<int>(fc.arms.size());
    std::vector<int> parts;
    for (int i = 0; i < rank; ++i) parts.push_back(fc.arms[static_cast<std::size_t>(i)] + i + 1);
    // Rows below the diagonal: row i has one cell in column j iff the leg of
    // diagonal cell j reaches it, i.e. legs[j] + j + 1 >= i + 1.
    for (int i = rank;; ++i) {
        int count = 0;
        for (int j = 0; j < rank; ++j)
            if (fc.legs[static_cast<std::size_t>(j)] + j + 1 >= i + 1) ++count;
        if (count == 0) break;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

// Gamma(beta) = (beta_1 - 1, beta_2 - 1, ... | beta_1, beta_2, ...) for
// strict beta; |Gamma(beta)| = 2|beta|.
inline Partition gamma(const Partition& beta) {
    if (!beta.is_strict())
        throw NotStrict("gamma requires a strict partition");
    FrobeniusCoordinates fc;
    for (int b : beta.parts()) {
        fc.arms.push_back(b - 1);
        fc.legs.push_back(b);
    }
    return from_frobenius(fc);
}

namespace detail {

inline void partitions_of_rec(int remaining, int max_part, bool strict,
                              std::vector<int>& prefix,
                              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int m = std::min(remaining, max_part); m >= 1; --m) {
        prefix.push_back(m);
        partitions_of_rec(remaining - m, strict ? m - 1 : m, strict, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

// All partitions (or strict partitions) of k, each exactly once, in
// reverse-lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
inline std::vector<Partition> partitions_of(int k, bool strict = false) {
    if (k < 0) throw InvalidArgument("partitions_of: negative k");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_of_rec(k, k, strict, prefix, out);
    return out;
}

// f^p, the number of standard Young tableaux of shape p (hook length formula).
inline Int dim_symmetric(const Partition& p) {
    const Partition conj = conjugate(p);
    Int hooks = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.row(i); ++j)
            hooks *= (p.row(i) - j) + (conj.row(j) - i) - 1;
    return factorial(p.size()) / hooks;
}

// dim V^{lambda,mu} = C(n, |lambda|) * f^lambda * f^mu, for |lambda|+|mu| = n.
inline Int dim_hyperoctahedral(const HIrrepLabel& label, int n) {
    if (label.lambda.size() + label.mu.size() != n)
        throw SizeMismatch("dim_hyperoctahedral: |lambda| + |mu| != n");
    return binomial(n, label.lambda.size()) * dim_symmetric(label.lambda) *
           dim_symmetric(label.mu);
}

// Text format: comma-separated decreasing positive parts ("3,1"); the empty
// partition reads as "" or "0". Non-decreasing input is rejected, never
// silently sorted.
inline Partition parse_partition(const std::string& text) {
    auto trim = [](const std::string& s) {
        const auto b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    const std::string body = trim(text);
    if (body.empty() || body == "0") return Partition();

    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        const std::size_t comma = body.find(',', pos);
        const std::string token =
            trim(body.substr(pos, comma == std::string::npos ? std::string::npos
                                                             : comma - pos));
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidPartition("cannot parse partition text: '" + text + "'");
        parts.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));  // validates positivity and ordering
}

inline std::string to_text(const Partition& p) {
    if (p.is_empty()) return "0";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.row(i));
    }
    return s;
}

inline std::string to_text(const HIrrepLabel& label) {
    return "(" + to_text(label.lambda) + " | " + to_text(label.mu) + ")";
}

}  // namespace hyperoct
