#include "pis/classify.hpp"

#include <chrono>
#include <fstream>
#include <mutex>
#include <thread>

namespace pis {

namespace {

std::string negative(const std::string& reason) { return "NEGATIVE(" + reason + ")"; }

// Line side of the classification, on the local profiles of the idempotent
// factors.
void classify_line(const std::vector<LocalProfile>& profiles, Prediction& out) {
    size_t n = profiles.size();
    if (n == 1) {
        const LocalProfile& P = profiles[0];
        if (P.isPIR && P.eta <= 4) {
            out.predictsLine = true;
            out.lineRule = "T2.1-i";
        } else if (P.minGen == 2 && P.hasNilPair) {
            out.predictsLine = true;
            out.lineRule = "T2.1-ii";
        } else if (P.isPIR) {
            out.lineRule = negative("η(M) ≥ 5");
        } else if (P.minGen == 2) {
            out.lineRule = negative("minGen = 2 but no generating pair with x² = y² = 0");
        } else {
            out.lineRule = negative("minGen ≥ 3");
        }
        return;
    }
    if (n >= 4) {
        out.lineRule = negative("n ≥ 4");
        return;
    }
    size_t fields = 0;
    for (const auto& P : profiles) fields += P.is_field();
    if (n == 3) {
        if (fields == 3) {
            out.predictsLine = true;
            out.lineRule = "T2.3-i";
        } else {
            out.lineRule = negative("some factor not a field");
        }
        return;
    }
    // n == 2
    if (fields == 2) {
        out.predictsLine = true;
        out.lineRule = "T2.3-ii";
        return;
    }
    if (fields == 0) {
        out.lineRule = negative("both factors non-field");
        return;
    }
    const LocalProfile& other = profiles[0].is_field() ? profiles[1] : profiles[0];
    if (other.isPIR && other.eta == 2) {
        out.predictsLine = true;
        out.lineRule = "T2.3-iii";
    } else if (!other.isPIR) {
        out.lineRule = negative("minGen(M₁) ≥ 2");
    } else {
        out.lineRule = negative("η(M₁) ≥ 3");
    }
}

// Complement side.  The non-local classes coincide with
// the line side; only the rule tags differ.
void classify_coline(const std::vector<LocalProfile>& profiles, Prediction& out) {
    size_t n = profiles.size();
    if (n == 1) {
        const LocalProfile& P = profiles[0];
        if (P.isPIR) {
            out.predictsCoLine = true;
            out.coLineRule = "T3.1-i";
        } else if (P.minGen == 2 && P.hasNilPairXYZero) {
            out.predictsCoLine = true;
            out.coLineRule = "T3.1-ii";
        } else if (P.minGen == 2 && P.hasNilPair) {
            out.coLineRule = negative("xy ≠ 0 and not PIR");
        } else if (P.minGen == 2) {
            out.coLineRule = negative("x² ≠ 0 and not PIR");
        } else {
            out.coLineRule = negative("minGen ≥ 3");
        }
        return;
    }
    if (n >= 4) {
        out.coLineRule = negative("n ≥ 4");
        return;
    }
    size_t fields = 0;
    for (const auto& P : profiles) fields += P.is_field();
    if (n == 3) {
        if (fields == 3) {
            out.predictsCoLine = true;
            out.coLineRule = "T3.2-i";
        } else {
            out.coLineRule = negative("some factor not a field");
        }
        return;
    }
    if (fields == 2) {
        out.predictsCoLine = true;
        out.coLineRule = "T3.2-ii";
        return;
    }
    if (fields == 0) {
        out.coLineRule = negative("both factors non-field");
        return;
    }
    const LocalProfile& other = profiles[0].is_field() ? profiles[1] : profiles[0];
    if (other.isPIR && other.eta == 2) {
        out.predictsCoLine = true;
        out.coLineRule = "T3.2-iii";
    } else if (!other.isPIR) {
        out.coLineRule = negative("minGen(M₁) ≥ 2");
    } else {
        out.coLineRule = negative("η(M₁) ≥ 3");
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

Prediction classify(const FiniteRing& R) {
    std::vector<LocalProfile> profiles;
    for (const FiniteRing& factor : decompose_local(R)) {
        IdealLattice lattice = enumerate_ideals(factor);
        LocalProfile P = local_profile(factor, lattice);
        if (!P.isLocal)
            throw BuildError("idempotent factor is not local");  // decomposition bug
        profiles.push_back(P);
    }
    Prediction pred;
    classify_line(profiles, pred);
    classify_coline(profiles, pred);
    return pred;
}

Report verify(const FiniteRing& R, const std::string& description) {
    Report rep;
    rep.ringDescription = description;
    rep.ringOrder = R.order;
    for (const FiniteRing& f : decompose_local(R)) rep.factorOrders.push_back(f.order);

    auto t0 = std::chrono::steady_clock::now();
    IdealLattice lattice = enumerate_ideals(R);
    rep.idealsTotal = static_cast<int>(lattice.ideals.size());
    rep.nontrivialProper = rep.idealsTotal - 2;
    for (bool p : lattice.primeFlags) rep.primeCount += p;
    rep.msLattice = ms_since(t0);

    Graph G = pis_graph(R, lattice);
    rep.pisVertices = G.n;
    rep.pisEdges = G.edge_count();
    rep.pisGraph = G;

    t0 = std::chrono::steady_clock::now();
    rep.line = is_line_graph(G);
    rep.coline = is_complement_line_graph(G);
    rep.msRecognize = ms_since(t0);

    rep.prediction = classify(R);
    rep.agreementLine = rep.prediction.predictsLine == rep.line.isLine;
    rep.agreementCoLine = rep.prediction.predictsCoLine == rep.coline.isLine;
    return rep;
}

std::vector<Report> census(const std::vector<std::string>& specLines, int threads) {
    std::vector<Report> reports(specLines.size());
    auto work = [&](size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        try {
            RingSpec spec = parse_ring_spec(specLines[i]);
            FiniteRing R = build_ring(spec);
            double build = ms_since(t0);
            reports[i] = verify(R, specLines[i]);
            reports[i].msBuild = build;
        } catch (const std::exception& e) {
            reports[i] = Report{};
            reports[i].ringDescription = specLines[i];
            reports[i].error = e.what();
        }
    };

    if (threads <= 1) {
        for (size_t i = 0; i < specLines.size(); ++i) work(i);
        return reports;
    }
    std::mutex m;
    size_t next = 0;
    auto worker = [&] {
        while (true) {
            size_t i;
            {
                std::lock_guard lock(m);
                if (next >= specLines.size()) return;
                i = next++;
            }
            work(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

std::vector<std::string> read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BuildError("cannot open catalog: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    return lines;
}

}  // namespace pis
