#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cecoh/corpus.hpp"
#include "cecoh/lefschetz.hpp"
#include "cecoh/massey.hpp"
#include "cecoh/topology.hpp"

namespace cecoh {

struct AnalyzeOptions {
    bool run_massey_scan = true;
    int massey_max_degree = -1;  // -1: default n-1
};

enum class FormalityVerdict { formal, non_formal, undetermined };
enum class StructureKind { none, symplectic, cosymplectic };

/// Machine-reproducible verdicts for one algebra; every field is a
/// deterministic function of the input AlgebraSpec and the options.
struct AnalysisReport {
    AlgebraSpec spec;
    bool nilpotent = false;
    bool unimodular = false;
    std::vector<int> betti;
    std::vector<std::vector<std::string>> representatives;  // per degree, printed forms
    long euler = 0;
    bool poincare_duality = false;

    StructureKind structure = StructureKind::none;
    std::optional<LefschetzReport> symplectic;  // symplectic Lefschetz maps

    std::optional<std::string> xi, theta;  // printed coordinate vectors
    bool xi_equals_theta = false;
    std::optional<std::vector<int>> invariant_betti;
    std::optional<std::vector<int>> basic_betti;
    bool splitting_holds = false;
    std::optional<LefschetzReport> k_cosymplectic;  // invariant Lefschetz maps
    std::optional<bool> one_lefschetz;

    bool massey_ran = false;
    int massey_max_degree = 0;
    std::vector<MasseyFinding> massey_findings;
    std::vector<std::string> massey_lines;  // rendered findings

    FormalityVerdict formality = FormalityVerdict::undetermined;
    std::string formality_reason;

    bool model_level_caveat = false;           // cohomology claims are model-level only
    std::optional<BettiVector> manifold_betti; // via the mapping-torus route
};

AnalysisReport analyze(const AlgebraSpec& spec, const AnalyzeOptions& options = {});

/// Line-oriented "key = value" rendering. With machine=false a few comment
/// headers are interleaved; the machine form contains no comments and is
/// byte-stable across runs.
std::string render_report(const AnalysisReport& report, bool machine);

/// Verdict table over the corpus: formality, Lefschetz property and Betti
/// parity per entry. The tests diff it against a golden file.
std::string render_corpus_table();

}  // namespace cecoh
