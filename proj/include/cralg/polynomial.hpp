#ifndef CRALG_POLYNOMIAL_HPP
#define CRALG_POLYNOMIAL_HPP

#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cralg/errors.hpp"
#include "cralg/gaussian_rational.hpp"
#include "cralg/variable_table.hpp"

namespace cralg {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic order on exponent vectors: lower total degree first,
// ties broken by the earliest table variable (higher exponent on an earlier
// variable sorts later).  Map iteration therefore starts at the constant term.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return a.size() < b.size();
    }
};

using TermMap = std::map<Exponents, GaussianRational, GradedLexLess>;

// Sparse exact multivariate polynomial over Q(i).  Stored coefficients are
// never zero and exponent vectors always match the table length.
class MultiPolynomial {
public:
    explicit MultiPolynomial(TablePtr table) : table_(std::move(table)) {
        if (!table_) throw MalformedTableError("MultiPolynomial: null table");
    }

    static MultiPolynomial constant(TablePtr table, const GaussianRational& c);
    static MultiPolynomial variable(TablePtr table, int index, int power = 1);
    static MultiPolynomial variable(TablePtr table, const std::string& name, int power = 1);

    const TablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial

    void add_term(const Exponents& exps, const GaussianRational& c);
    GaussianRational coeff(const Exponents& exps) const;
    GaussianRational constant_term() const { return coeff(Exponents(table_->size(), 0)); }

    MultiPolynomial operator-() const;
    MultiPolynomial& operator+=(const MultiPolynomial& o);
    MultiPolynomial& operator-=(const MultiPolynomial& o);
    MultiPolynomial& operator*=(const GaussianRational& c);

    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
    friend MultiPolynomial operator*(MultiPolynomial a, const GaussianRational& c) { return a *= c; }
    friend MultiPolynomial operator*(const GaussianRational& c, MultiPolynomial a) { return a *= c; }
    friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b);
    friend bool operator!=(const MultiPolynomial& a, const MultiPolynomial& b) { return !(a == b); }

    MultiPolynomial pow(int e) const;
    MultiPolynomial derivative(int var) const;
    MultiPolynomial derivative(const std::string& var) const { return derivative(table_->index_of(var)); }

    // Formal conjugation: swap exponents between paired variables, conjugate
    // coefficients.  Unpaired Parameter variables are fixed; any other
    // unpaired variable occurring in the polynomial is an error.
    MultiPolynomial conjugate_swap() const;

    // Drop all terms of total degree > order.
    MultiPolynomial truncated(int order) const;

    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;
    GaussianRational evaluate(const std::map<int, GaussianRational>& point) const;

    int max_exponent(int var) const;
    bool depends_on(int var) const { return max_exponent(var) > 0; }

    std::string str() const;

private:
    TablePtr table_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPolynomial& p);

// Total-degree truncated power series: a polynomial together with the order
// through which its coefficients are certified.
class TruncatedSeries {
public:
    TruncatedSeries(MultiPolynomial poly, int order)
        : poly_(poly.truncated(order)), order_(order) {
        if (order < 0) throw CompositionError("TruncatedSeries: negative order");
    }

    static TruncatedSeries zero(TablePtr table, int order) {
        return TruncatedSeries(MultiPolynomial(std::move(table)), order);
    }
    static TruncatedSeries constant(TablePtr table, const GaussianRational& c, int order) {
        return TruncatedSeries(MultiPolynomial::constant(std::move(table), c), order);
    }
    static TruncatedSeries variable(TablePtr table, int index, int order) {
        return TruncatedSeries(MultiPolynomial::variable(std::move(table), index), order);
    }

    const MultiPolynomial& poly() const { return poly_; }
    const TablePtr& table() const { return poly_.table(); }
    int order() const { return order_; }
    bool is_zero() const { return poly_.is_zero(); }
    GaussianRational constant_term() const { return poly_.constant_term(); }

    TruncatedSeries with_order(int order) const { return TruncatedSeries(poly_, order); }

    TruncatedSeries operator-() const { return TruncatedSeries(-poly_, order_); }
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ + b.poly_, std::min(a.order_, b.order_));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ - b.poly_, std::min(a.order_, b.order_));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ * b.poly_, std::min(a.order_, b.order_));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const GaussianRational& c) {
        return TruncatedSeries(a.poly_ * c, a.order_);
    }
    friend TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& a) { return a * c; }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.poly_ == b.poly_;
    }

    TruncatedSeries derivative(int var) const {
        return TruncatedSeries(poly_.derivative(var), order_ > 0 ? order_ - 1 : 0);
    }
    TruncatedSeries conjugate_swap() const { return TruncatedSeries(poly_.conjugate_swap(), order_); }

    std::string str() const { return poly_.str(); }

private:
    MultiPolynomial poly_;
    int order_;
};

// --- Substitution -----------------------------------------------------------
//
// images[i] replaces variable i of p's table; every image lives over the
// target table.  Polynomial-into-polynomial substitution is exact and places
// no restriction on constant terms.

MultiPolynomial substitute(const MultiPolynomial& p, const TablePtr& target,
                           const std::vector<MultiPolynomial>& images);

TruncatedSeries substitute(const MultiPolynomial& p, const TablePtr& target,
                           const std::vector<TruncatedSeries>& images, int order);

// Series composition.  Requires zero constant term for the image of every
// variable actually occurring in f; otherwise total-degree truncation would
// be ill-defined for a truncated f.
TruncatedSeries compose(const TruncatedSeries& f, const TablePtr& target,
                        const std::vector<TruncatedSeries>& images);

// Multiplicative inverse of a series with unit (nonzero) constant term.
TruncatedSeries reciprocal(const TruncatedSeries& u);

// Identity images for composing maps over a shared table.
std::vector<TruncatedSeries> identity_images(const TablePtr& table, int order);

}  // namespace cralg

#endif
