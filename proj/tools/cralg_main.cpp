#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cralg/report.hpp"

using namespace cralg;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
}

struct Common {
    std::string file;
    std::string out;
    int order = -1;
    int qmax = -1;
    int kmax = -1;
    int degree = -1;
    int samples = -1;
    std::string theta_grid = "default";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("file", c.file, "problem file")->required();
    cmd->add_option("--out", c.out, "write the JSON report to a file");
    cmd->add_option("--order", c.order, "truncation order (default 12)");
    cmd->add_option("--qmax", c.qmax, "annihilator degree bound in f");
    cmd->add_option("--kmax", c.kmax, "annihilator degree bound in t");
    cmd->add_option("--degree", c.degree, "total degree bound of the final ansatz");
    cmd->add_option("--samples", c.samples, "sampled curves per family");
    cmd->add_option("--theta-grid", c.theta_grid, "default|extended")
        ->check(CLI::IsMember({"default", "extended"}));
}

// CLI flags override the options stated in the file.
void apply_overrides(ProblemFile& pf, const Common& c) {
    if (c.order >= 0) pf.order = c.order;
    if (c.qmax >= 0) pf.qmax = c.qmax;
    if (c.kmax >= 0) pf.kmax = c.kmax;
    if (c.degree >= 0) pf.degree = c.degree;
    if (c.samples >= 0) pf.samples = c.samples;
}

DefiningSystem source_system(const ProblemFile& pf) {
    if (pf.rho.empty()) throw ParseError("no rho definitions in the file", 0, 0);
    return make_defining_system(pf.n, pf.rho);
}

DefiningSystem target_system(const ProblemFile& pf) {
    if (pf.rhop.empty()) return source_system(pf);
    return make_defining_system(pf.np, pf.rhop);
}

CRMapData map_of(const ProblemFile& pf) {
    if (pf.fnum.empty()) throw ParseError("no map components in the file", 0, 0);
    return make_cr_map(pf.table, pf.basepoint, pf.fnum, pf.fden);
}

PipelineOptions options_of(const ProblemFile& pf, const Common& c) {
    PipelineOptions opts;
    opts.bounds.qmax = pf.qmax;
    opts.bounds.kmax = pf.kmax;
    opts.bounds.degree = pf.degree;
    opts.bounds.samples = pf.samples;
    opts.extended_grid = c.theta_grid == "extended";
    return opts;
}

int run(const std::string& cmd, Common& c) {
    if (cmd == "annihilator") {
        MultiPolynomial f = parse_series_file(read_file(c.file));
        int order = c.order >= 0 ? c.order : 12;
        int qmax = c.qmax >= 0 ? c.qmax : 3;
        int kmax = c.kmax >= 0 ? c.kmax : 3;
        auto ann = find_annihilator(TruncatedSeries(f, order), qmax, kmax);
        if (!ann) {
            write_output(c.out, emit_status("not_found", "no annihilator within the bounds",
                                            {{"searched", "q <= " + std::to_string(qmax) +
                                                              ", k <= " + std::to_string(kmax)}}));
            return 3;
        }
        write_output(c.out, emit_report(*ann));
        return 0;
    }

    ProblemFile pf = parse_input(read_file(c.file));
    apply_overrides(pf, c);

    if (cmd == "separate-alg") {
        // The function is F1 as a rational closed form; coordinate-line
        // families through the base point.
        CRMapData F = map_of(pf);
        auto zt = std::make_shared<VariableTable>();
        for (int i = 1; i <= pf.n; ++i) zt->add("z" + std::to_string(i), VarKind::Parameter);
        std::vector<TruncatedSeries> imgs;
        for (int l = 0; l < pf.n; ++l)
            imgs.push_back(TruncatedSeries::constant(zt, pf.basepoint[l], pf.order) +
                           TruncatedSeries::variable(zt, l, pf.order));
        TruncatedSeries f = map_series_on(F, imgs, pf.order)[0];
        SeparateBounds bounds{pf.qmax, pf.kmax, pf.degree, pf.samples};
        auto cert = separate_algebraicity(f, coordinate_line_families(pf.n, pf.order),
                                          std::vector<GaussianRational>(pf.n, GaussianRational(0)),
                                          bounds, pf.order);
        write_output(c.out, emit_report(cert));
        return cert.success ? 0 : 3;
    }

    DefiningSystem M = source_system(pf);
    PointOnM p{pf.basepoint};

    if (cmd == "check-manifold") {
        GenericityReport rep = check_defining_system(M, p);
        write_output(c.out, emit_report(rep));
        return rep.pass ? 0 : 1;
    }
    if (cmd == "levi") {
        LeviData levi = levi_operator_matrices(M, p);
        LeviConeResult cone = levi_cone_nondegenerate(M, p);
        write_output(c.out, emit_report(levi, cone));
        return cone.nondegenerate ? 0 : 1;
    }
    if (cmd == "tangent-ops") {
        auto [chart, nM] = normalize_at_point(M, p);
        write_output(c.out, emit_report(tangent_operators(nM)));
        return 0;
    }
    if (cmd == "segre") {
        auto [chart, nM] = normalize_at_point(M, p);
        LiftedFieldsResult lifted = lifted_fields(nM, c.theta_grid == "extended");
        SegreVariety S = segre_variety(M, pf.basepoint);
        write_output(c.out, emit_report(lifted, S));
        return lifted.spans ? 0 : 1;
    }
    if (cmd == "check-map") {
        HypothesisReport rep = hypothesis_report(M, p, target_system(pf), map_of(pf), pf.order);
        write_output(c.out, emit_report(rep));
        return rep.pass ? 0 : 1;
    }
    if (cmd == "extend-map") {
        auto cert = extend_map(M, p, target_system(pf), map_of(pf), options_of(pf, c), pf.order);
        write_output(c.out, emit_report(cert));
        return 0;
    }
    throw ParseError("unknown subcommand '" + cmd + "'", 0, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact CR-manifold and algebraicity toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"check-manifold", "levi",      "tangent-ops",
                                               "segre",          "check-map", "extend-map",
                                               "annihilator",    "separate-alg"};
    std::map<std::string, Common> common;
    for (const auto& name : commands) {
        CLI::App* cmd = app.add_subcommand(name);
        add_common(cmd, common[name]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, common[cmd]);
    } catch (const ParseError& e) {
        std::cerr << emit_status("parse_error", e.what(),
                                 {{"line", std::to_string(e.line)},
                                  {"column", std::to_string(e.column)}});
        return 2;
    } catch (const HypothesisFailed& e) {
        std::cout << emit_status("hypothesis_failed", e.what());
        return 1;
    } catch (const OrderInsufficient& e) {
        std::cout << emit_status("order_insufficient", e.what(),
                                 {{"required_order", std::to_string(e.required_order)}});
        return 3;
    } catch (const NotFound& e) {
        std::cout << emit_status("not_found", e.what());
        return 3;
    } catch (const Error& e) {
        std::cerr << emit_status("error", e.what());
        return 2;
    }
}
