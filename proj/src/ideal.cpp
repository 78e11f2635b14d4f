#include "pis/ideal.hpp"

#include <algorithm>
#include <map>

namespace pis {

namespace {

// Deterministic order: smaller ideals first, ties by member list.
bool ideal_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.members() < b.members();
}

// Closes a subset containing 0 under addition; the result of closing a set
// of the form (union of ideals) or (products of ideals) is absorbing too.
void close_under_addition(const FiniteRing& R, Bitset& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto mem = s.members();
        for (int a : mem)
            for (int b : mem) {
                int c = R.add(a, b);
                if (!s.test(c)) {
                    s.set(c);
                    changed = true;
                }
            }
    }
}

}  // namespace

int IdealLattice::find(const Bitset& members) const {
    for (size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i].members == members) return static_cast<int>(i);
    return -1;
}

Ideal principal_ideal(const FiniteRing& R, int a) {
    Ideal I;
    I.members = Bitset(R.order);
    for (int r = 0; r < R.order; ++r) I.members.set(R.mul(r, a));
    I.generatorsHint = {a};
    return I;
}

Ideal ideal_generated_by(const FiniteRing& R, const std::vector<int>& gens) {
    Ideal I;
    I.members = Bitset(R.order);
    I.members.set(R.zero);
    for (int g : gens) I.members |= principal_ideal(R, g).members;
    close_under_addition(R, I.members);
    I.generatorsHint = gens;
    return I;
}

Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J) {
    Ideal S;
    S.members = Bitset(R.order);
    for (int a : I.members.members())
        for (int b : J.members.members()) S.members.set(R.add(a, b));
    return S;
}

Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J) {
    Ideal P;
    P.members = Bitset(R.order);
    P.members.set(R.zero);
    for (int a : I.members.members())
        for (int b : J.members.members()) P.members.set(R.mul(a, b));
    close_under_addition(R, P.members);
    return P;
}

bool is_ideal(const FiniteRing& R, const Bitset& members) {
    if (!members.test(R.zero)) return false;
    auto mem = members.members();
    for (int a : mem)
        for (int b : mem)
            if (!members.test(R.add(a, b))) return false;
    for (int a : mem)
        for (int r = 0; r < R.order; ++r)
            if (!members.test(R.mul(r, a))) return false;
    return true;
}

bool is_prime_ideal(const FiniteRing& R, const Ideal& I) {
    if (I.members.count() == R.order) return false;  // proper
    for (int a = 0; a < R.order; ++a) {
        if (I.members.test(a)) continue;
        for (int b = 0; b < R.order; ++b) {
            if (I.members.test(b)) continue;
            if (I.members.test(R.mul(a, b))) return false;
        }
    }
    return true;
}

IdealLattice enumerate_ideals(const FiniteRing& R, int idealCap) {
    std::map<std::vector<uint64_t>, Ideal> found;
    std::vector<Ideal> worklist;
    for (int a = 0; a < R.order; ++a) {
        Ideal I = principal_ideal(R, a);
        auto key = I.members.words();
        if (!found.count(key)) {
            found.emplace(key, I);
            worklist.push_back(I);
        }
    }
    // Fixpoint of pairwise sums.
    while (!worklist.empty()) {
        Ideal I = std::move(worklist.back());
        worklist.pop_back();
        std::vector<Ideal> snapshot;
        snapshot.reserve(found.size());
        for (auto& [k, J] : found) snapshot.push_back(J);
        for (const Ideal& J : snapshot) {
            Ideal S = ideal_sum(R, I, J);
            auto key = S.members.words();
            if (!found.count(key)) {
                if (static_cast<int>(found.size()) >= idealCap)
                    throw BuildError("ideal enumeration exceeded cap of " +
                                     std::to_string(idealCap));
                found.emplace(key, S);
                worklist.push_back(S);
            }
        }
    }

    IdealLattice L;
    for (auto& [k, I] : found) L.ideals.push_back(std::move(I));
    std::sort(L.ideals.begin(), L.ideals.end(),
              [](const Ideal& a, const Ideal& b) { return ideal_less(a.members, b.members); });

    size_t n = L.ideals.size();
    L.primeFlags.resize(n);
    L.maximalFlags.resize(n);
    for (size_t i = 0; i < n; ++i) L.primeFlags[i] = is_prime_ideal(R, L.ideals[i]);
    for (size_t i = 0; i < n; ++i) {
        bool proper = L.ideals[i].members.count() < R.order;
        bool maximal = proper;
        for (size_t j = 0; j < n && maximal; ++j) {
            if (j == i) continue;
            if (L.ideals[j].members.count() == R.order) continue;
            if (L.ideals[i].members.is_subset_of(L.ideals[j].members) &&
                L.ideals[i].members != L.ideals[j].members)
                maximal = false;
        }
        L.maximalFlags[i] = maximal;
    }

    L.sumTable.assign(n, std::vector<int>(n, -1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            Ideal S = ideal_sum(R, L.ideals[i], L.ideals[j]);
            int idx = L.find(S.members);
            L.sumTable[i][j] = L.sumTable[j][i] = idx;
        }
    return L;
}

LocalProfile local_profile(const FiniteRing& R, const IdealLattice& lattice) {
    LocalProfile P;
    std::vector<int> maximals;
    for (size_t i = 0; i < lattice.ideals.size(); ++i)
        if (lattice.maximalFlags[i]) maximals.push_back(static_cast<int>(i));
    P.isLocal = maximals.size() == 1;
    if (!P.isLocal) return P;

    P.maximalIdeal = maximals[0];
    const Ideal& M = lattice.ideals[P.maximalIdeal];
    P.residueOrder = R.order / M.members.count();

    // eta: least n with M^n = <0>
    Ideal power = M;
    P.eta = 1;
    while (power.members.count() > 1) {
        power = ideal_product(R, power, M);
        ++P.eta;
    }

    // minGen by exhaustive subset search over nonzero members of M,
    // increasing subset size.
    std::vector<int> mem;
    for (int a : M.members.members())
        if (a != R.zero) mem.push_back(a);
    if (mem.empty()) {
        P.minGen = 0;  // field: M = <0>
    } else {
        for (int k = 1; P.minGen == 0; ++k) {
            std::vector<int> pick(k);
            auto search = [&](auto&& self, int start, int depth) -> bool {
                if (depth == k)
                    return ideal_generated_by(R, pick).members == M.members;
                for (size_t i = start; i < mem.size(); ++i) {
                    pick[depth] = mem[i];
                    if (self(self, static_cast<int>(i) + 1, depth + 1)) return true;
                }
                return false;
            };
            if (search(search, 0, 0)) P.minGen = k;
        }
    }

    // isPIR: every ideal arises as a principal ideal.
    std::vector<bool> principal(lattice.ideals.size(), false);
    for (int a = 0; a < R.order; ++a) {
        int idx = lattice.find(principal_ideal(R, a).members);
        if (idx >= 0) principal[idx] = true;
    }
    P.isPIR = std::all_of(principal.begin(), principal.end(), [](bool b) { return b; });

    // Generating pairs with the nilpotency relations the classifier needs.
    for (int x : M.members.members()) {
        if (R.mul(x, x) != R.zero) continue;
        for (int y : M.members.members()) {
            if (R.mul(y, y) != R.zero) continue;
            if (ideal_generated_by(R, {x, y}).members != M.members) continue;
            P.hasNilPair = true;
            if (R.mul(x, y) == R.zero) {
                P.hasNilPairXYZero = true;
                return P;
            }
        }
    }
    return P;
}

std::vector<FiniteRing> decompose_local(const FiniteRing& R) {
    std::vector<int> idempotents;
    for (int e = 0; e < R.order; ++e)
        if (e != R.zero && R.mul(e, e) == e) idempotents.push_back(e);

    // Primitive idempotents are the minimal nonzero ones under f <= e iff ef = f.
    std::vector<int> primitive;
    for (int e : idempotents) {
        bool minimal = true;
        for (int f : idempotents)
            if (f != e && R.mul(e, f) == f) {
                minimal = false;
                break;
            }
        if (minimal) primitive.push_back(e);
    }

    if (primitive.size() == 1) return {R};

    int sum = R.zero;
    for (int e : primitive) sum = R.add(sum, e);
    if (sum != R.one) throw BuildError("primitive idempotents do not sum to 1");

    std::vector<FiniteRing> factors;
    for (int e : primitive) {
        std::vector<int> elems;
        std::vector<int> toLocal(R.order, -1);
        for (int r = 0; r < R.order; ++r) {
            int x = R.mul(e, r);
            if (toLocal[x] < 0) {
                toLocal[x] = static_cast<int>(elems.size());
                elems.push_back(x);
            }
        }
        FiniteRing F;
        F.order = static_cast<int>(elems.size());
        F.addTable.resize(size_t(F.order) * F.order);
        F.mulTable.resize(size_t(F.order) * F.order);
        for (int a = 0; a < F.order; ++a)
            for (int b = 0; b < F.order; ++b) {
                F.addTable[size_t(a) * F.order + b] =
                    static_cast<uint16_t>(toLocal[R.add(elems[a], elems[b])]);
                F.mulTable[size_t(a) * F.order + b] =
                    static_cast<uint16_t>(toLocal[R.mul(elems[a], elems[b])]);
            }
        F.zero = toLocal[R.zero];
        F.one = toLocal[e];
        F.labels.resize(F.order);
        for (int a = 0; a < F.order; ++a) F.labels[a] = R.labels[elems[a]];
        F.provenance = R.provenance;
        F.negTable.resize(F.order);
        for (int a = 0; a < F.order; ++a)
            for (int b = 0; b < F.order; ++b)
                if (F.add(a, b) == F.zero) {
                    F.negTable[a] = static_cast<uint16_t>(b);
                    break;
                }
        if (F.order <= 256) check_ring_axioms(F);
        factors.push_back(std::move(F));
    }
    return factors;
}

std::string ideal_label(const FiniteRing& R, const Ideal& I) {
    if (I.members.count() == R.order) return "R";
    // Prefer a single generator, then a pair, in label order.
    auto mem = I.members.members();
    for (int a : mem)
        if (principal_ideal(R, a).members == I.members) return "<" + R.labels[a] + ">";
    for (size_t i = 0; i < mem.size(); ++i)
        for (size_t j = i + 1; j < mem.size(); ++j)
            if (ideal_generated_by(R, {mem[i], mem[j]}).members == I.members)
                return "<" + R.labels[mem[i]] + "," + R.labels[mem[j]] + ">";
    std::string out = "{";
    for (size_t i = 0; i < mem.size(); ++i) {
        if (i) out += ",";
        out += R.labels[mem[i]];
    }
    return out + "}";
}

}  // namespace pis
