#include "cralg/cr_map.hpp"

namespace cralg {

namespace {

std::vector<GaussianRational> full_point(int n, const std::vector<GaussianRational>& z) {
    std::vector<GaussianRational> f = z;
    for (int i = 0; i < n; ++i) f.push_back(z[i].conj());
    return f;
}

}  // namespace

CRMapData make_cr_map(TablePtr source_table, std::vector<GaussianRational> base,
                      std::vector<MultiPolynomial> num, std::vector<MultiPolynomial> den) {
    CRMapData F;
    if (!source_table || source_table->size() % 2 != 0)
        throw MalformedTableError("make_cr_map: need a paired z/zb table");
    F.n = static_cast<int>(source_table->size()) / 2;
    F.np = static_cast<int>(num.size());
    if (num.size() != den.size() || num.empty())
        throw MalformedTableError("make_cr_map: component count mismatch");
    if (static_cast<int>(base.size()) != F.n)
        throw BasepointError("make_cr_map: base point dimension mismatch");
    F.table = std::move(source_table);
    for (const auto& c : num)
        if (!same_table(c.table(), F.table))
            throw TableMismatchError("make_cr_map: mixed tables");
    for (const auto& c : den)
        if (!same_table(c.table(), F.table))
            throw TableMismatchError("make_cr_map: mixed tables");
    for (int i = 0; i < F.np; ++i)
        for (int v = F.n; v < 2 * F.n; ++v)
            if (num[i].depends_on(v) || den[i].depends_on(v))
                throw MalformedTableError("make_cr_map: components must be holomorphic");
    F.base = std::move(base);
    F.num = std::move(num);
    F.den = std::move(den);
    auto pt = full_point(F.n, F.base);
    for (int i = 0; i < F.np; ++i) {
        GaussianRational dv = F.den[i].evaluate(pt);
        if (dv.is_zero())
            throw EvaluationError("make_cr_map: denominator vanishes at the base point");
        F.value.push_back(F.num[i].evaluate(pt) / dv);
    }
    return F;
}

CRMapData make_polynomial_map(TablePtr source_table, std::vector<GaussianRational> base,
                              std::vector<MultiPolynomial> components) {
    std::vector<MultiPolynomial> den;
    den.reserve(components.size());
    for (const auto& c : components)
        den.push_back(MultiPolynomial::constant(c.table(), GaussianRational(1)));
    return make_cr_map(std::move(source_table), std::move(base), std::move(components),
                       std::move(den));
}

std::vector<GaussianRational> map_value(const CRMapData& F,
                                        const std::vector<GaussianRational>& z) {
    auto pt = full_point(F.n, z);
    std::vector<GaussianRational> out;
    out.reserve(F.np);
    for (int i = 0; i < F.np; ++i) {
        GaussianRational dv = F.den[i].evaluate(pt);
        if (dv.is_zero()) throw EvaluationError("map_value: denominator vanishes");
        out.push_back(F.num[i].evaluate(pt) / dv);
    }
    return out;
}

QMatrix map_jacobian(const CRMapData& F, const std::vector<GaussianRational>& z) {
    auto pt = full_point(F.n, z);
    QMatrix J(F.np, F.n);
    for (int i = 0; i < F.np; ++i) {
        GaussianRational dv = F.den[i].evaluate(pt);
        if (dv.is_zero()) throw EvaluationError("map_jacobian: denominator vanishes");
        GaussianRational nv = F.num[i].evaluate(pt);
        for (int j = 0; j < F.n; ++j) {
            GaussianRational dn = F.num[i].derivative(j).evaluate(pt);
            GaussianRational dd = F.den[i].derivative(j).evaluate(pt);
            J(i, j) = (dn * dv - nv * dd) / (dv * dv);
        }
    }
    return J;
}

std::vector<TruncatedSeries> map_series_on(const CRMapData& F,
                                           const std::vector<TruncatedSeries>& images, int order) {
    if (static_cast<int>(images.size()) != F.n)
        throw TableMismatchError("map_series_on: need one image per z variable");
    const TablePtr& target = images[0].table();
    std::vector<TruncatedSeries> ext = images;
    for (int i = 0; i < F.n; ++i) ext.push_back(TruncatedSeries::zero(target, order));
    std::vector<TruncatedSeries> out;
    out.reserve(F.np);
    for (int i = 0; i < F.np; ++i) {
        TruncatedSeries nume = substitute(F.num[i], target, ext, order);
        TruncatedSeries dens = substitute(F.den[i], target, ext, order);
        if (dens.constant_term().is_zero())
            throw EvaluationError("map_series_on: denominator is not a unit on the patch");
        out.push_back(nume * reciprocal(dens));
    }
    return out;
}

std::vector<TruncatedSeries> map_local_series(const CRMapData& F, int order) {
    std::vector<TruncatedSeries> images;
    images.reserve(F.n);
    for (int i = 0; i < F.n; ++i) {
        MultiPolynomial img = MultiPolynomial::variable(F.table, i) +
                              MultiPolynomial::constant(F.table, F.base[i]);
        images.push_back(TruncatedSeries(img, order));
    }
    return map_series_on(F, images, order);
}

CRMapData normalized_map(const CRMapData& F, const NormalizationMap& source,
                         const NormalizationMap& target) {
    const int n = F.n, np = F.np;
    TablePtr fresh = make_zzb_table(n);

    // z = p + C*zeta substituted into the closed forms.
    std::vector<MultiPolynomial> images;
    images.reserve(2 * n);
    for (int nu = 0; nu < n; ++nu) {
        MultiPolynomial img = MultiPolynomial::constant(fresh, source.base[nu]);
        for (int mu = 0; mu < n; ++mu)
            img += MultiPolynomial::variable(fresh, mu) * source.C(nu, mu);
        images.push_back(img);
    }
    for (int nu = 0; nu < n; ++nu) images.push_back(MultiPolynomial(fresh));

    std::vector<MultiPolynomial> N, D;
    for (int j = 0; j < np; ++j) {
        N.push_back(substitute(F.num[j], fresh, images));
        D.push_back(substitute(F.den[j], fresh, images));
    }
    MultiPolynomial Dall = MultiPolynomial::constant(fresh, GaussianRational(1));
    for (const auto& d : D) Dall = Dall * d;

    std::vector<MultiPolynomial> gnum, gden;
    for (int i = 0; i < np; ++i) {
        MultiPolynomial acc(fresh);
        for (int j = 0; j < np; ++j) {
            if (target.Cinv(i, j).is_zero()) continue;
            MultiPolynomial prod = N[j];
            for (int l = 0; l < np; ++l)
                if (l != j) prod = prod * D[l];
            acc += prod * target.Cinv(i, j);
        }
        GaussianRational shift(0);
        for (int j = 0; j < np; ++j) shift += target.Cinv(i, j) * target.base[j];
        acc -= Dall * shift;
        gnum.push_back(std::move(acc));
        gden.push_back(Dall);
    }
    std::vector<GaussianRational> zero(n, GaussianRational(0));
    return make_cr_map(fresh, zero, std::move(gnum), std::move(gden));
}

}  // namespace cralg
