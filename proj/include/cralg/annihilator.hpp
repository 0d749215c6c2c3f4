#ifndef CRALG_ANNIHILATOR_HPP
#define CRALG_ANNIHILATOR_HPP

#include <optional>
#include <vector>

#include "cralg/linalg.hpp"
#include "cralg/polynomial.hpp"

namespace cralg {

// Annihilating polynomial of a truncated series: P(f, t) == 0 (or P(f, v) in
// the multivariate case) modulo the certified order.  P lives over a table
// whose first variable is the f symbol, followed by the series variables.
struct Annihilator {
    MultiPolynomial P;
    int q = 0;  // degree bound in f of the found candidate
    int k = 0;  // degree bound in t (univariate) or total degree D (multivariate)
    int certified_order = 0;
};

// Minimal annihilator search for a univariate series by iterative deepening
// over q + k (ties: smaller q first), exact kernel of the Taylor-coefficient
// matrix of the monomials f^i t^j.  The pivot coefficient (first nonzero in
// graded-lex order) is normalized to 1 and the result re-verified against f.
// Returns nullopt when every candidate within the bounds has a trivial
// kernel.  Throws OrderInsufficient when the series order cannot support a
// candidate, stating the required order.
std::optional<Annihilator> find_annihilator(const TruncatedSeries& f, int qmax, int kmax,
                                            int margin = 4);

// Multivariate version: ansatz over the monomials f^i v^alpha of total degree
// <= D, deepening D from 1 so the first hit has minimal total degree.
std::optional<Annihilator> multivariate_annihilator(const TruncatedSeries& f, int D,
                                                    int margin = 4);

}  // namespace cralg

#endif
