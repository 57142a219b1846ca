#pragma once

#include <map>
#include <vector>

#include "hyperoct/partition.hpp"
#include "hyperoct/schur.hpp"

namespace hyperoct {

// Plethysm by h_2 and e_2 only. The generator cases are the closed forms
//
//   h_k o h_2 = sum over alpha |- k of s_{2 alpha}
//   e_k o h_2 = sum over strict beta |- k of s_{Gamma(beta)'}
//   h_k o e_2 = sum over alpha |- k of s_{(2 alpha)'}
//   e_k o e_2 = sum over strict beta |- k of s_{Gamma(beta)}
//
// and arbitrary Schur inputs reduce to the h-generator case through the
// Jacobi-Trudi expansion, plethysm being a ring homomorphism in its left
// argument.

// 2*alpha = (2*alpha_1, 2*alpha_2, ...).
inline Partition doubled(const Partition& alpha) {
    std::vector<int> parts = alpha.parts();
    for (int& x : parts) x *= 2;
    return Partition(std::move(parts));
}

inline const SchurExpansion& h_pleth_h2(int k) {
    if (k < 0) throw InvalidArgument("h_pleth_h2: negative degree");
    thread_local std::map<int, SchurExpansion> memo;
    const auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    SchurExpansion f;
    for (const Partition& alpha : partitions_of(k)) f.add_term(doubled(alpha), 1);
    return memo.emplace(k, std::move(f)).first->second;
}

inline const SchurExpansion& e_pleth_h2(int k) {
    if (k < 0) throw InvalidArgument("e_pleth_h2: negative degree");
    thread_local std::map<int, SchurExpansion> memo;
    const auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    SchurExpansion f;
    for (const Partition& beta : partitions_of(k, /*strict=*/true))
        f.add_term(conjugate(gamma(beta)), 1);
    return memo.emplace(k, std::move(f)).first->second;
}

inline const SchurExpansion& h_pleth_e2(int k) {
    if (k < 0) throw InvalidArgument("h_pleth_e2: negative degree");
    thread_local std::map<int, SchurExpansion> memo;
    const auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    SchurExpansion f;
    for (const Partition& alpha : partitions_of(k)) f.add_term(conjugate(doubled(alpha)), 1);
    return memo.emplace(k, std::move(f)).first->second;
}

inline const SchurExpansion& e_pleth_e2(int k) {
    if (k < 0) throw InvalidArgument("e_pleth_e2: negative degree");
    thread_local std::map<int, SchurExpansion> memo;
    const auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    SchurExpansion f;
    for (const Partition& beta : partitions_of(k, /*strict=*/true))
        f.add_term(gamma(beta), 1);
    return memo.emplace(k, std::move(f)).first->second;
}

// s_p o h_2: expand jacobi_trudi_h(p) and substitute h_k |-> h_k o h_2.
// Homogeneous of degree 2|p| with nonnegative coefficients, despite the
// signed intermediate sum.
inline const SchurExpansion& schur_pleth_h2(const Partition& p) {
    thread_local std::map<Partition, SchurExpansion> memo;
    const auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    SchurExpansion f =
        evaluate(jacobi_trudi_h(p), [](int k) { return h_pleth_h2(k); });
    return memo.emplace(p, std::move(f)).first->second;
}

// s_p o e_2, via the same Jacobi-Trudi route with h_k |-> h_k o e_2. The
// identity omega(f o h_2) = f o e_2 is checked in tests against this direct
// computation, it is deliberately not used to implement it.
inline const SchurExpansion& schur_pleth_e2(const Partition& p) {
    thread_local std::map<Partition, SchurExpansion> memo;
    const auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    SchurExpansion f =
        evaluate(jacobi_trudi_h(p), [](int k) { return h_pleth_e2(k); });
    return memo.emplace(p, std::move(f)).first->second;
}

}  // namespace hyperoct
