#include "cralg/report.hpp"

#include <json.hpp>

namespace cralg {

namespace {

using Json = nlohmann::ordered_json;

Json jnum(const GaussianRational& q) { return q.str(); }

Json jvec(const std::vector<GaussianRational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(jnum(q));
    return a;
}

Json jvec(const QVector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(jnum(v(i)));
    return a;
}

Json jmat(const QMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(jnum(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json jpoly(const MultiPolynomial& p) {
    Json vars = Json::array();
    for (int i = 0; i < p.table()->size(); ++i) vars.push_back(p.table()->name(i));
    Json terms = Json::array();
    for (const auto& [exps, c] : p.terms()) {
        Json t;
        t["coeff"] = jnum(c);
        t["exps"] = exps;
        terms.push_back(std::move(t));
    }
    Json out;
    out["vars"] = std::move(vars);
    out["terms"] = std::move(terms);
    return out;
}

Json jann(const Annihilator& a) {
    Json out;
    out["q"] = a.q;
    out["k"] = a.k;
    out["certified_order"] = a.certified_order;
    out["P"] = jpoly(a.P);
    return out;
}

Json wrap(const std::string& kind, Json body) {
    Json out;
    out["schema_version"] = kReportSchemaVersion;
    out["kind"] = kind;
    out["result"] = std::move(body);
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json jgenericity(const GenericityReport& r) {
    Json out;
    out["pass"] = r.pass;
    out["reality_ok"] = r.reality_ok;
    out["non_real_indices"] = r.non_real_indices;
    out["antiholomorphic_rank"] = r.antiholomorphic_rank;
    out["message"] = r.message;
    return out;
}

Json jrank(const RankCertificate& r) {
    Json out;
    out["pass"] = r.pass;
    out["rank"] = r.rank;
    out["required"] = r.required;
    return out;
}

Json jcone(const LeviConeResult& cone) {
    Json out;
    out["nondegenerate"] = cone.nondegenerate;
    Json wit = Json::array();
    for (const auto& v : cone.witness_values) wit.push_back(jvec(v));
    out["witness_values"] = std::move(wit);
    if (cone.annihilating_covector)
        out["annihilating_covector"] = jvec(*cone.annihilating_covector);
    return out;
}

Json jhypothesis(const HypothesisReport& r) {
    Json out;
    out["pass"] = r.pass;
    out["failed_condition"] = r.failed_condition;
    out["membership"] = r.membership;
    out["source_genericity"] = jgenericity(r.source);
    out["target_genericity"] = jgenericity(r.target);
    out["levi_cone"] = jcone(r.levi_cone);
    out["condition_2_5"] = jrank(r.condition_2_5);
    out["subset_selected"] = r.subset_selected;
    out["full_system_rank"] = jrank(r.full_rank);
    out["lifted_rank"] = r.lifted.rank;
    out["lifted_spans"] = r.lifted.spans;
    return out;
}

}  // namespace

std::string emit_report(const GenericityReport& r) {
    return dump(wrap("genericity", jgenericity(r)));
}

std::string emit_report(const LeviData& levi, const LeviConeResult& cone) {
    Json body;
    Json mats = Json::array();
    for (const auto& m : levi.levi_matrices) mats.push_back(jmat(m));
    body["levi_matrices"] = std::move(mats);
    body["tangent_basis"] = jmat(levi.tangent_basis);
    body["cone"] = jcone(cone);
    return dump(wrap("levi", std::move(body)));
}

std::string emit_report(const std::vector<TangentOperator>& ops) {
    Json body = Json::array();
    for (const auto& T : ops) {
        Json op;
        op["q"] = T.q;
        op["delta"] = jpoly(T.delta);
        Json coeffs = Json::array();
        for (const auto& a : T.coeffs) coeffs.push_back(jpoly(a));
        op["coeffs"] = std::move(coeffs);
        body.push_back(std::move(op));
    }
    return dump(wrap("tangent_operators", std::move(body)));
}

std::string emit_report(const LiftedFieldsResult& lifted, const SegreVariety& S) {
    Json body;
    body["zeta"] = jvec(S.zeta);
    Json sys = Json::array();
    for (const auto& p : S.system) sys.push_back(jpoly(p));
    body["segre_system"] = std::move(sys);
    Json grid = Json::array();
    for (const auto& th : lifted.grid) grid.push_back(jvec(th));
    body["theta_grid"] = std::move(grid);
    body["lifted_rank"] = lifted.rank;
    body["spans"] = lifted.spans;
    return dump(wrap("segre", std::move(body)));
}

std::string emit_report(const HypothesisReport& r) {
    return dump(wrap("hypothesis_report", jhypothesis(r)));
}

std::string emit_report(const ExtensionCertificate& c) {
    Json body;
    body["order"] = c.order;
    body["report"] = jhypothesis(c.report);
    Json per_curve = Json::array();
    for (const auto& pc : c.per_curve) {
        Json e;
        e["component"] = pc.component;
        e["family"] = pc.family;
        e["sample"] = pc.sample;
        e["param"] = jnum(pc.param);
        e["annihilator"] = jann(pc.ann);
        per_curve.push_back(std::move(e));
    }
    body["per_curve"] = std::move(per_curve);
    Json anns = Json::array();
    for (const auto& P : c.annihilators) anns.push_back(jpoly(P));
    body["annihilators"] = std::move(anns);
    Json checks = Json::array();
    for (size_t i = 0; i < c.varieties.size(); ++i) {
        Json v;
        v["zeta"] = jvec(c.varieties[i].zeta);
        Json eqs = Json::array();
        for (const auto& p : c.varieties[i].equations) eqs.push_back(jpoly(p));
        v["equations"] = std::move(eqs);
        v["graph_verified"] = c.variety_checks[i];
        checks.push_back(std::move(v));
    }
    body["varieties"] = std::move(checks);
    return dump(wrap("extension_certificate", std::move(body)));
}

std::string emit_report(const Annihilator& a) { return dump(wrap("annihilator", jann(a))); }

std::string emit_report(const SeparateCertificate& c) {
    Json body;
    body["success"] = c.success;
    body["failure"] = c.failure;
    body["order"] = c.order;
    Json per_curve = Json::array();
    for (const auto& pc : c.per_curve) {
        Json e;
        e["family"] = pc.family;
        e["sample"] = pc.sample;
        e["params"] = jvec(pc.params);
        e["annihilator"] = jann(pc.ann);
        per_curve.push_back(std::move(e));
    }
    body["per_curve"] = std::move(per_curve);
    if (c.final_chart) body["final_chart"] = jann(*c.final_chart);
    if (c.final_z) body["final_z"] = jpoly(*c.final_z);
    return dump(wrap("separate_algebraicity", std::move(body)));
}

std::string emit_status(const std::string& status, const std::string& message,
                        const std::vector<std::pair<std::string, std::string>>& extra) {
    Json out;
    out["schema_version"] = kReportSchemaVersion;
    out["status"] = status;
    out["message"] = message;
    for (const auto& [k, v] : extra) out[k] = v;
    return dump(out);
}

}  // namespace cralg
