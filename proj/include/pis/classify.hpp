#pragma once

#include <string>
#include <vector>

#include "pis/recognize.hpp"

namespace pis {

// Rule-based prediction of the two verdicts, with the rule that fired:
// T2.1-i/ii and T2.3-i/ii/iii on the line side, T3.1-i/ii and T3.2-i/ii/iii
// on the complement side.  Negative rules are "NEGATIVE(<failed hypothesis>)".
struct Prediction {
    bool predictsLine = false;
    bool predictsCoLine = false;
    std::string lineRule;
    std::string coLineRule;
};

// Full per-ring verification record.
struct Report {
    std::string ringDescription;
    int ringOrder = 0;
    std::vector<int> factorOrders;

    int idealsTotal = 0;
    int nontrivialProper = 0;
    int primeCount = 0;

    int pisVertices = 0;
    long pisEdges = 0;
    Graph pisGraph;

    LineVerdict line, coline;
    Prediction prediction;
    bool agreementLine = false;
    bool agreementCoLine = false;

    // set when a census entry failed; all other fields are unreliable then
    std::string error;

    double msBuild = 0, msLattice = 0, msRecognize = 0;
};

// Classifies via the idempotent decomposition, so Table-sourced rings are
// handled identically to constructed ones.
Prediction classify(const FiniteRing& R);

// Builds the lattice and PIS graph, runs both recognizers and the
// classifier, and records whether prediction and recognition agree.
Report verify(const FiniteRing& R, const std::string& description);

// Parses, builds and verifies each catalog line; per-ring failures are
// recorded in that ring's report and the sweep continues.  Reports keep
// catalog order.  threads <= 1 means single-threaded.
std::vector<Report> census(const std::vector<std::string>& specLines, int threads = 1);

// Catalog file: one ring spec per line, '#' starts a comment.
std::vector<std::string> read_catalog(const std::string& path);

}  // namespace pis
