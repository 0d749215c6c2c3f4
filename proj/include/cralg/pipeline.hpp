#ifndef CRALG_PIPELINE_HPP
#define CRALG_PIPELINE_HPP

#include <string>
#include <vector>

#include "cralg/flows.hpp"
#include "cralg/segre.hpp"

namespace cralg {

struct PipelineOptions {
    SeparateBounds bounds;
    int zeta_samples = 3;       // sampled points for the variety cross-check
    bool extended_grid = false; // theta grid for the lifted-field scan
};

// Dry-run verdicts for every hypothesis of the extension theorem; failures
// are recorded, not thrown.
struct HypothesisReport {
    bool membership = false;       // rho'(F, Fb) vanishes on the complexification
    GenericityReport source;
    GenericityReport target;
    LeviConeResult levi_cone;
    RankCertificate condition_2_5;
    bool subset_selected = false;  // invertible tangential subsystem exists
    RankCertificate full_rank;     // conjugated system rank in the map symbols
    LiftedFieldsResult lifted;

    bool pass = false;
    std::string failed_condition;  // names the first violated condition
};

struct PerCurveAnnihilator {
    int component;  // 1-based index of F_i
    int family;     // 1-based
    int sample;
    GaussianRational param;  // frozen value of the section parameters
    Annihilator ann;
};

struct ExtensionCertificate {
    HypothesisReport report;
    NormalizationMap source_chart;
    NormalizationMap target_chart;
    std::vector<CurveFamily> families;  // in normalized source coordinates
    std::vector<PerCurveAnnihilator> per_curve;
    std::vector<SeparateCertificate> components;  // engine runs, one per F_i
    // Final annihilators P_i(F_i, z) in the original coordinates, over the
    // table (F_i, z1..zn); each re-verified against the series of F_i.
    std::vector<MultiPolynomial> annihilators;
    std::vector<AtildeSystem> varieties;  // at the sampled zeta, normalized coords
    std::vector<bool> variety_checks;     // graph-in-variety verdicts
    int order = 0;
};

// Runs the full extension procedure: membership and hypothesis checks,
// reflection-side rank certificates, curve families from the Segre sections,
// per-curve algebraicity of every component, the separate-algebraicity
// engine, and the variety cross-check at sampled points.  Throws
// HypothesisFailed (named condition) on a violated hypothesis and NotFound
// when an annihilator search is exhausted.
ExtensionCertificate extend_map(const DefiningSystem& M, const PointOnM& p,
                                const DefiningSystem& Mp, const CRMapData& F,
                                const PipelineOptions& opts, int N);

// Hypothesis verdicts only; no curves, no annihilators, no throwing.
HypothesisReport hypothesis_report(const DefiningSystem& M, const PointOnM& p,
                                   const DefiningSystem& Mp, const CRMapData& F, int N = 12);

}  // namespace cralg

#endif
