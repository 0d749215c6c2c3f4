#ifndef CRALG_FLOWS_HPP
#define CRALG_FLOWS_HPP

#include <string>
#include <vector>

#include "cralg/annihilator.hpp"
#include "cralg/segre.hpp"

namespace cralg {

// One-parameter flow of a curve family: the self-map z -> position after
// sliding along the family curve through z by tau.  Series over the table
// (tau, z1..zn).
struct FamilyFlow {
    TablePtr table;
    std::vector<TruncatedSeries> map;
};

FamilyFlow family_flow(const CurveFamily& fam, int N);

// Curvilinear coordinates from n families in general position: forward chart
// t -> phi_n(t_n) o ... o phi_1(t_1)(z0) and its Newton inverse (taking the
// offset z - z0).
struct FlowChart {
    std::vector<GaussianRational> base;    // z0
    TablePtr ttable;                       // t1..tn
    TablePtr ztable;                       // z1..zn offsets from z0
    std::vector<TruncatedSeries> forward;  // z(t), constant terms z0
    std::vector<TruncatedSeries> inverse;  // t(z - z0)
    QMatrix jacobian;                      // dz/dt at 0 = family tangents
};

FlowChart curvilinear_chart(const std::vector<CurveFamily>& families,
                            const std::vector<GaussianRational>& z0, int N);

// Jets of f (in chart coordinates) in the variable t_{m+1} at 0 with the
// variables beyond m+1 set to 0: entry s is (d/dt_{m+1})^s f / restricted,
// a series in t_1..t_m.
std::vector<TruncatedSeries> derivative_jets(const TruncatedSeries& f_chart, int m, int s_max);

struct SeparateBounds {
    int qmax = 3;
    int kmax = 3;
    int degree = 4;  // total degree bound D for the final ansatz
    int samples = 3;
    int margin = 4;
};

struct CurveCheck {
    int family;  // 1-based
    int sample;
    std::vector<GaussianRational> params;  // frozen values of the other chart variables
    Annihilator ann;
};

struct SeparateCertificate {
    bool success = false;
    std::string failure;  // names the family/curve when not successful
    std::optional<FlowChart> chart;
    std::vector<CurveCheck> per_curve;
    std::optional<Annihilator> final_chart;   // P(f, t) in chart coordinates
    std::optional<MultiPolynomial> final_z;   // P(f, z) via the inverse chart, truncated
    int order = 0;
};

// Separate-algebraicity procedure at truncation order: pulls f back through the chart,
// checks per-family univariate annihilators on sampled curves, then builds
// the final multivariate annihilator and converts it back to z coordinates.
// f is a series in the z offsets from z0.
SeparateCertificate separate_algebraicity(const TruncatedSeries& f,
                                          const std::vector<CurveFamily>& families,
                                          const std::vector<GaussianRational>& z0,
                                          const SeparateBounds& bounds, int N);

// The n coordinate-line families of C^n (the classical configuration).
std::vector<CurveFamily> coordinate_line_families(int n, int N);

}  // namespace cralg

#endif
