#pragma once

// The end-to-end analysis of one algebra, and its JSON and text renderings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lieaut/autom.hpp"
#include "lieaut/lie_algebra.hpp"
#include "lieaut/megaideal.hpp"

namespace lieaut {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisOptions {
    std::size_t budget = 4;
    bool full_prop34 = false;
    std::size_t max_enum_dim = 16;
};

struct AnalysisReport {
    LieAlgebra algebra;
    std::string input_digest;
    ValidationReport validation;
    std::vector<SeriesReport> series;
    MegaidealLattice lattice;
    std::vector<MegaidealVerdict> verdicts;  // parallel to lattice.members
    AdaptedBasis basis;
    PolySystem system;
    AutParametrization parametrization;
    std::optional<std::vector<Subspace>> invariant_subspaces;  // empty when the system is unsolved
    std::string enumeration_note;
    InnerConsistencyReport inner;

    /// Every stage ran and the automorphism system was solved completely.
    bool complete() const { return validation.valid() && parametrization.solved() && invariant_subspaces.has_value(); }
};

/// Runs the full pipeline. An invalid algebra stops after validation.
AnalysisReport analyze(const LieAlgebra& g, std::string input_digest, const AnalysisOptions& options = {});

nlohmann::ordered_json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

nlohmann::ordered_json subspace_json(const LieAlgebra& g, const Subspace& s);

}  // namespace lieaut
