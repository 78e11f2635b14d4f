#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pis/ring.hpp"

namespace pis {

// Subset of ring elements closed under addition and absorbing under
// multiplication by every ring element.
struct Ideal {
    Bitset members;
    std::vector<int> generatorsHint;  // small generating set when known
};

// All ideals of a ring, sorted by (size, member list); index 0 is the zero
// ideal and the last index is the whole ring.
struct IdealLattice {
    std::vector<Ideal> ideals;
    std::vector<bool> primeFlags, maximalFlags;
    std::vector<std::vector<int>> sumTable;  // index x index -> index

    int zero_index() const { return 0; }
    int ring_index() const { return static_cast<int>(ideals.size()) - 1; }
    int find(const Bitset& members) const;  // -1 when absent
};

// Structural invariants of a local ring that the classification consumes.
// Fields beyond isLocal are meaningful only when isLocal is true.
struct LocalProfile {
    bool isLocal = false;
    int maximalIdeal = -1;    // lattice index of M
    long residueOrder = 0;    // |R/M|
    int eta = 0;              // least n with M^n = 0 (1 for fields)
    int minGen = 0;           // minimal number of generators of M (0 for fields)
    bool isPIR = false;       // every ideal principal
    bool hasNilPair = false;        // exists <x,y> = M with x^2 = y^2 = 0
    bool hasNilPairXYZero = false;  // additionally xy = 0

    bool is_field() const { return isLocal && eta == 1; }
};

Ideal principal_ideal(const FiniteRing& R, int a);
Ideal ideal_generated_by(const FiniteRing& R, const std::vector<int>& gens);

// {i + j : i in I, j in J}
Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J);

// Ideal generated by all pairwise products.
Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J);

bool is_ideal(const FiniteRing& R, const Bitset& members);
bool is_prime_ideal(const FiniteRing& R, const Ideal& I);

// Closure of the principal ideals under pairwise sums; complete because
// every ideal is the sum of its principal subideals.
IdealLattice enumerate_ideals(const FiniteRing& R, int idealCap = 100000);

LocalProfile local_profile(const FiniteRing& R, const IdealLattice& lattice);

// Splits R along its primitive orthogonal idempotents; returns {R} when R
// is local.  Every factor is a local ring with unity the idempotent.
std::vector<FiniteRing> decompose_local(const FiniteRing& R);

// Short human-readable name for an ideal: generator notation when a small
// generating set exists, e.g. "<2>" or "<x,y>".
std::string ideal_label(const FiniteRing& R, const Ideal& I);

}  // namespace pis
