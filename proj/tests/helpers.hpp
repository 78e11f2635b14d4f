#pragma once

#include <string>
#include <vector>

#include "pis/classify.hpp"

namespace testutil {

inline pis::FiniteRing ring(const std::string& specText) {
    return pis::build_ring(pis::parse_ring_spec(specText));
}

// Elements of a product ring whose i-th component lies in comp[i].
// Component bitsets are over the factor rings; factors must be in spec order.
inline pis::Bitset product_ideal(const pis::FiniteRing& R,
                                 const std::vector<pis::FiniteRing>& factors,
                                 const std::vector<pis::Bitset>& comp) {
    std::vector<int> orders;
    for (const auto& f : factors) orders.push_back(f.order);
    pis::Bitset out(R.order);
    for (int a = 0; a < R.order; ++a) {
        auto c = pis::product_components(orders, a);
        bool inside = true;
        for (size_t i = 0; i < factors.size() && inside; ++i)
            if (!comp[i].test(c[i])) inside = false;
        if (inside) out.set(a);
    }
    return out;
}

inline pis::Bitset full_set(const pis::FiniteRing& R) {
    pis::Bitset s(R.order);
    for (int a = 0; a < R.order; ++a) s.set(a);
    return s;
}

inline pis::Bitset zero_set(const pis::FiniteRing& R) {
    pis::Bitset s(R.order);
    s.set(R.zero);
    return s;
}

// Lattice indices of the PIS vertices, in vertex order.
inline std::vector<int> pis_vertex_indices(const pis::FiniteRing& R,
                                           const pis::IdealLattice& L) {
    std::vector<int> out;
    for (size_t i = 0; i < L.ideals.size(); ++i) {
        int sz = L.ideals[i].members.count();
        if (sz > 1 && sz < R.order) out.push_back(static_cast<int>(i));
    }
    return out;
}

// PIS vertex index of the ideal with the given member set; -1 if absent.
inline int pis_vertex_of(const pis::FiniteRing& R, const pis::IdealLattice& L,
                         const pis::Bitset& members) {
    auto verts = pis_vertex_indices(R, L);
    for (size_t v = 0; v < verts.size(); ++v)
        if (L.ideals[verts[v]].members == members) return static_cast<int>(v);
    return -1;
}

// Brute-force ideal enumeration: all subsets containing zero that are
// closed under addition and absorbing.  Usable up to order ~16.
inline std::vector<pis::Bitset> all_ideals_bruteforce(const pis::FiniteRing& R) {
    std::vector<pis::Bitset> out;
    int n = R.order;
    for (long mask = 0; mask < (1L << n); ++mask) {
        if (!(mask >> R.zero & 1)) continue;
        pis::Bitset s(n);
        for (int a = 0; a < n; ++a)
            if (mask >> a & 1) s.set(a);
        if (pis::is_ideal(R, s)) out.push_back(s);
    }
    return out;
}

}  // namespace testutil
