#ifndef CRALG_PARSER_HPP
#define CRALG_PARSER_HPP

#include <string>
#include <vector>

#include "cralg/polynomial.hpp"

namespace cralg {

// Parsed problem file: a source manifold, an optional target manifold, an
// optional rational map with a base point, and the working options.
struct ProblemFile {
    int n = 0;
    int np = 0;
    int order = 12;
    int qmax = 3;
    int kmax = 3;
    int degree = 4;
    int samples = 3;
    TablePtr table;         // z1..zn, zb1..zbn
    TablePtr target_table;  // z1..znp, zb1..zbnp
    std::vector<GaussianRational> basepoint;  // size n, defaults to 0
    std::vector<MultiPolynomial> rho;
    std::vector<MultiPolynomial> rhop;
    std::vector<MultiPolynomial> fnum;
    std::vector<MultiPolynomial> fden;

    friend bool operator==(const ProblemFile& a, const ProblemFile& b) {
        return a.n == b.n && a.np == b.np && a.order == b.order && a.qmax == b.qmax &&
               a.kmax == b.kmax && a.degree == b.degree && a.samples == b.samples &&
               a.basepoint == b.basepoint && a.rho == b.rho && a.rhop == b.rhop &&
               a.fnum == b.fnum && a.fden == b.fden;
    }
};

// Parses the statement grammar `name = expr;` with `#` comments; throws
// ParseError with line/column on lexical, syntax, undeclared-variable and
// non-real-rho errors.
ProblemFile parse_input(const std::string& text);

// Canonical text form; parse_input(print_problem(p)) == p.
std::string print_problem(const ProblemFile& p);

// Canonical expression form of a polynomial, accepted by the parser.
std::string polynomial_text(const MultiPolynomial& p);

// A univariate series file: a single statement `f = expr;` in the variable t.
MultiPolynomial parse_series_file(const std::string& text);

}  // namespace cralg

#endif
