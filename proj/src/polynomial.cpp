#include "cralg/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cralg {

MultiPolynomial MultiPolynomial::constant(TablePtr table, const GaussianRational& c) {
    MultiPolynomial p(std::move(table));
    p.add_term(Exponents(p.table_->size(), 0), c);
    return p;
}

MultiPolynomial MultiPolynomial::variable(TablePtr table, int index, int power) {
    MultiPolynomial p(std::move(table));
    if (index < 0 || index >= p.table_->size())
        throw MalformedTableError("MultiPolynomial::variable: bad index");
    if (power < 0) throw MalformedTableError("MultiPolynomial::variable: negative power");
    Exponents e(p.table_->size(), 0);
    e[index] = power;
    p.add_term(e, GaussianRational(1));
    return p;
}

MultiPolynomial MultiPolynomial::variable(TablePtr table, const std::string& name, int power) {
    int idx = table->index_of(name);
    return variable(std::move(table), idx, power);
}

int MultiPolynomial::degree() const {
    if (terms_.empty()) return -1;
    // Graded order: the last term has maximal total degree.
    return total_degree(terms_.rbegin()->first);
}

void MultiPolynomial::add_term(const Exponents& exps, const GaussianRational& c) {
    if (static_cast<int>(exps.size()) != table_->size())
        throw MalformedTableError("MultiPolynomial::add_term: exponent length mismatch");
    for (int e : exps)
        if (e < 0) throw MalformedTableError("MultiPolynomial::add_term: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational MultiPolynomial::coeff(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

MultiPolynomial MultiPolynomial::operator-() const {
    MultiPolynomial r(table_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

namespace {
void check_tables(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (!same_table(a.table(), b.table()))
        throw TableMismatchError("polynomial operation on mismatched variable tables");
}
}  // namespace

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
    check_tables(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
    check_tables(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    check_tables(a, b);
    MultiPolynomial r(a.table());
    Exponents e(a.table()->size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return same_table(a.table(), b.table()) && a.terms_ == b.terms_;
}

MultiPolynomial MultiPolynomial::pow(int e) const {
    if (e < 0) throw MalformedTableError("MultiPolynomial::pow: negative exponent");
    MultiPolynomial r = constant(table_, GaussianRational(1));
    MultiPolynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

MultiPolynomial MultiPolynomial::derivative(int var) const {
    if (var < 0 || var >= table_->size())
        throw MalformedTableError("MultiPolynomial::derivative: bad variable index");
    MultiPolynomial r(table_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * GaussianRational(e[var]));
    }
    return r;
}

MultiPolynomial MultiPolynomial::conjugate_swap() const {
    MultiPolynomial r(table_);
    Exponents d(table_->size());
    for (const auto& [e, c] : terms_) {
        std::fill(d.begin(), d.end(), 0);
        for (int i = 0; i < table_->size(); ++i) {
            if (e[i] == 0) continue;
            int j = table_->partner(i);
            if (j >= 0) {
                d[j] += e[i];
            } else if (table_->kind(i) == VarKind::Parameter) {
                d[i] += e[i];
            } else {
                throw MalformedTableError("conjugate_swap: variable '" + table_->name(i) +
                                          "' has no conjugate partner");
            }
        }
        r.add_term(d, c.conj());
    }
    return r;
}

MultiPolynomial MultiPolynomial::truncated(int order) const {
    MultiPolynomial r(table_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) > order) break;  // graded order: all later terms are larger
        r.terms_.emplace(e, c);
    }
    return r;
}

GaussianRational MultiPolynomial::evaluate(const std::vector<GaussianRational>& point) const {
    if (static_cast<int>(point.size()) != table_->size())
        throw EvaluationError("evaluate: point dimension mismatch");
    GaussianRational sum(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational v = c;
        for (int i = 0; i < table_->size(); ++i) {
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

GaussianRational MultiPolynomial::evaluate(const std::map<int, GaussianRational>& point) const {
    std::vector<GaussianRational> full(table_->size());
    std::vector<bool> assigned(table_->size(), false);
    for (const auto& [i, v] : point) {
        if (i < 0 || i >= table_->size()) throw EvaluationError("evaluate: bad variable index");
        full[i] = v;
        assigned[i] = true;
    }
    for (int i = 0; i < table_->size(); ++i)
        if (!assigned[i] && depends_on(i))
            throw EvaluationError("evaluate: unassigned variable '" + table_->name(i) + "'");
    return evaluate(full);
}

int MultiPolynomial::max_exponent(int var) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
}

std::string MultiPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int i = 0; i < table_->size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << table_->name(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPolynomial& p) { return os << p.str(); }

// --- Substitution -----------------------------------------------------------

namespace {

// Shared engine: substitutes with series images, truncating at `order`.
// Power tables per variable keep the cost reasonable at desk scale.
TruncatedSeries substitute_impl(const MultiPolynomial& p, const TablePtr& target,
                                const std::vector<TruncatedSeries>& images, int order) {
    if (static_cast<int>(images.size()) != p.table()->size())
        throw CompositionError("substitute: one image per source variable required");
    for (const auto& img : images)
        if (!same_table(img.table(), target))
            throw TableMismatchError("substitute: image over wrong table");

    std::vector<std::vector<TruncatedSeries>> powers(p.table()->size());
    for (int i = 0; i < p.table()->size(); ++i) {
        int m = p.max_exponent(i);
        powers[i].reserve(m + 1);
        powers[i].push_back(TruncatedSeries::constant(target, GaussianRational(1), order));
        for (int k = 1; k <= m; ++k)
            powers[i].push_back(TruncatedSeries((powers[i][k - 1] * images[i]).poly(), order));
    }

    MultiPolynomial acc(target);
    for (const auto& [e, c] : p.terms()) {
        TruncatedSeries term = TruncatedSeries::constant(target, c, order);
        for (int i = 0; i < p.table()->size(); ++i)
            if (e[i] > 0) term = TruncatedSeries((term * powers[i][e[i]]).poly(), order);
        acc += term.poly();
    }
    return TruncatedSeries(acc, order);
}

}  // namespace

MultiPolynomial substitute(const MultiPolynomial& p, const TablePtr& target,
                           const std::vector<MultiPolynomial>& images) {
    if (static_cast<int>(images.size()) != p.table()->size())
        throw CompositionError("substitute: one image per source variable required");
    for (const auto& img : images)
        if (!same_table(img.table(), target))
            throw TableMismatchError("substitute: image over wrong table");

    std::vector<std::vector<MultiPolynomial>> powers(p.table()->size());
    for (int i = 0; i < p.table()->size(); ++i) {
        int m = p.max_exponent(i);
        powers[i].push_back(MultiPolynomial::constant(target, GaussianRational(1)));
        for (int k = 1; k <= m; ++k) powers[i].push_back(powers[i][k - 1] * images[i]);
    }
    MultiPolynomial acc(target);
    for (const auto& [e, c] : p.terms()) {
        MultiPolynomial term = MultiPolynomial::constant(target, c);
        for (int i = 0; i < p.table()->size(); ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        acc += term;
    }
    return acc;
}

TruncatedSeries substitute(const MultiPolynomial& p, const TablePtr& target,
                           const std::vector<TruncatedSeries>& images, int order) {
    return substitute_impl(p, target, images, order);
}

TruncatedSeries compose(const TruncatedSeries& f, const TablePtr& target,
                        const std::vector<TruncatedSeries>& images) {
    int order = f.order();
    for (int i = 0; i < f.table()->size(); ++i) {
        if (!f.poly().depends_on(i)) continue;
        if (i >= static_cast<int>(images.size()))
            throw CompositionError("compose: missing image for occurring variable");
        if (!images[i].constant_term().is_zero())
            throw CompositionError("compose: image of '" + f.table()->name(i) +
                                   "' has nonzero constant term");
        order = std::min(order, images[i].order());
    }
    return substitute_impl(f.poly(), target, images, order);
}

TruncatedSeries reciprocal(const TruncatedSeries& u) {
    GaussianRational c0 = u.constant_term();
    if (c0.is_zero()) throw CompositionError("reciprocal: constant term is zero");
    int order = u.order();
    const TablePtr& tbl = u.table();
    // Newton iteration r <- r*(2 - u*r), doubling correct order each step.
    TruncatedSeries r = TruncatedSeries::constant(tbl, c0.inverse(), order);
    TruncatedSeries two = TruncatedSeries::constant(tbl, GaussianRational(2), order);
    int good = 1;
    while (good <= order) {
        r = r * (two - u * r);
        good *= 2;
    }
    return r;
}

std::vector<TruncatedSeries> identity_images(const TablePtr& table, int order) {
    std::vector<TruncatedSeries> v;
    v.reserve(table->size());
    for (int i = 0; i < table->size(); ++i) v.push_back(TruncatedSeries::variable(table, i, order));
    return v;
}

}  // namespace cralg
