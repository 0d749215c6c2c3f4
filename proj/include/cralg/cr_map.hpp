#ifndef CRALG_CR_MAP_HPP
#define CRALG_CR_MAP_HPP

#include <vector>

#include "cralg/manifold.hpp"

namespace cralg {

// Holomorphic map germ F: (C^n, p) -> C^np with exact rational components
// num_i / den_i in the z-variables only.  Keeping the closed form (instead of
// a truncated expansion) lets every restriction and coordinate change stay
// exact; series are derived on demand.
struct CRMapData {
    int n = 0;
    int np = 0;
    TablePtr table;  // source z/zb table
    std::vector<GaussianRational> base;   // p
    std::vector<MultiPolynomial> num;     // holomorphic numerators
    std::vector<MultiPolynomial> den;     // holomorphic denominators, den_i(p) != 0
    std::vector<GaussianRational> value;  // F(p)
};

// Validates the components (z-variables only, unit denominators at p) and
// evaluates F(p).
CRMapData make_cr_map(TablePtr source_table, std::vector<GaussianRational> base,
                      std::vector<MultiPolynomial> num, std::vector<MultiPolynomial> den);

// Polynomial map shorthand: all denominators are 1.
CRMapData make_polynomial_map(TablePtr source_table, std::vector<GaussianRational> base,
                              std::vector<MultiPolynomial> components);

// Exact evaluation; throws EvaluationError on a denominator zero.
std::vector<GaussianRational> map_value(const CRMapData& F,
                                        const std::vector<GaussianRational>& z);

// Exact Jacobian dF at z via the quotient rule.
QMatrix map_jacobian(const CRMapData& F, const std::vector<GaussianRational>& z);

// Component series centered at the base point: variable z_i stands for the
// offset z_i - p_i, the constant terms are F(p).
std::vector<TruncatedSeries> map_local_series(const CRMapData& F, int order);

// Series of F along a substituted arc/patch: z_i -> images[i] (series over any
// parameter table, arbitrary constant terms).  Exact through `order` because
// the closed num/den form is substituted before the single reciprocal.
std::vector<TruncatedSeries> map_series_on(const CRMapData& F,
                                           const std::vector<TruncatedSeries>& images, int order);

// The map in normalized coordinates on both sides: zeta -> C'^{-1}(F(p + C
// zeta) - p'), again as an exact rational map with base 0.
CRMapData normalized_map(const CRMapData& F, const NormalizationMap& source,
                         const NormalizationMap& target);

}  // namespace cralg

#endif
