// Command-line front end: evaluate the spectral density, sweep the far
// field, dump the residue tables, run the acceptance checks, and measure
// reciprocity.  Output is JSON or CSV; every document embeds the manifest
// that produced it, so identical invocations give identical bytes.

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lemwedge/errors.hpp>
#include <lemwedge/verification.hpp>

using json = nlohmann::json;
using namespace lemwedge;

namespace {

struct CliOpts {
    WedgeConfig cfg;
    std::string format = "json";
    unsigned seed = 12345;
    std::string grid;  // "start:stop:count", empty means command default
    std::string zeta;  // "re,im"
    std::vector<std::string> tol_overrides;
};

json cplx_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json manifest_json(const CliOpts& o, const char* command) {
    return {{"command", command},
            {"format", o.format},
            {"seed", o.seed},
            {"theta_i", o.cfg.theta_i},
            {"eps", o.cfg.eps},
            {"k0", o.cfg.k0},
            {"tol",
             {{"tol_ell", o.cfg.tol.tol_ell},
              {"tol_fd", o.cfg.tol.tol_fd},
              {"tol_curve", o.cfg.tol.tol_curve},
              {"tol_tbl", o.cfg.tol.tol_tbl},
              {"tol_eval", o.cfg.tol.tol_eval},
              {"pole_guard", o.cfg.tol.pole_guard}}}};
}

json document(const CliOpts& o, const char* command) {
    return {{"schema_version", 1}, {"manifest", manifest_json(o, command)}};
}

// no NaN or infinity may reach an output document; refused rows are
// serialized as nulls with their flag, anything else non-finite is a bug
bool all_finite(const json& j) {
    if (j.is_number_float()) return std::isfinite(j.get<double>());
    if (j.is_object() || j.is_array())
        for (const auto& v : j)
            if (!all_finite(v)) return false;
    return true;
}

int fail_nonfinite() {
    std::cerr << json{{"error", "NonFiniteOutput"},
                      {"message", "output contains non-finite values"}}
                     .dump()
              << "\n";
    return 1;
}

int usage_error(const std::string& msg) {
    std::cerr << "usage error: " << msg << "\n";
    return 2;
}

std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void print_csv_manifest(const CliOpts& o, const char* command) {
    std::cout << "# " << manifest_json(o, command).dump() << "\n";
}

bool parse_grid(const std::string& s, std::vector<double>& out) {
    double start = 0.0, stop = 0.0;
    int count = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &start, &stop, &count, &tail) !=
            3 ||
        count < 1)
        return false;
    out.clear();
    if (count == 1) {
        out.push_back(start);
        return true;
    }
    for (int k = 0; k < count; ++k)
        out.push_back(start + k * (stop - start) / (count - 1));
    return true;
}

bool parse_cplx(const std::string& s, cplx& out) {
    double re = 0.0, im = 0.0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%lf,%lf%c", &re, &im, &tail) != 2) return false;
    out = cplx(re, im);
    return true;
}

int apply_tol_overrides(CliOpts& o) {
    for (const std::string& ov : o.tol_overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos)
            return usage_error("--tol-override expects key=value, got '" + ov +
                               "'");
        const std::string key = ov.substr(0, eq);
        char tail = 0;
        double val = 0.0;
        if (std::sscanf(ov.c_str() + eq + 1, "%lf%c", &val, &tail) != 1)
            return usage_error("bad tolerance value in '" + ov + "'");
        Tolerances& t = o.cfg.tol;
        if (key == "tol_ell")
            t.tol_ell = val;
        else if (key == "tol_fd")
            t.tol_fd = val;
        else if (key == "tol_curve")
            t.tol_curve = val;
        else if (key == "tol_tbl")
            t.tol_tbl = val;
        else if (key == "tol_eval")
            t.tol_eval = val;
        else if (key == "pole_guard")
            t.pole_guard = val;
        else
            return usage_error("unknown tolerance key '" + key + "'");
    }
    return 0;
}

int cmd_eval(const CliOpts& o) {
    cplx zeta;
    if (!parse_cplx(o.zeta, zeta))
        return usage_error("--zeta expects 're,im', got '" + o.zeta + "'");

    const SpectralSolution sol = assemble(o.cfg);
    const CurvePoint p = point_of_zeta({zeta}, o.cfg.tol.pole_guard);
    const TorusPoint u =
        u_of_zeta({zeta}, o.cfg.tol.tol_curve, o.cfg.tol.pole_guard);
    const cplx qs = Q_scat_zeta(zeta, sol);
    const cplx qt = Q_total(zeta, sol);

    json out = document(o, "eval");
    out["zeta"] = cplx_json(zeta);
    out["t"] = cplx_json(p.t);
    out["Y"] = cplx_json(p.Y);
    out["u"] = cplx_json(u.u);
    out["Q_scat"] = cplx_json(qs);
    out["Q_total"] = cplx_json(qt);
    if (!all_finite(out)) return fail_nonfinite();

    if (o.format == "csv") {
        print_csv_manifest(o, "eval");
        std::cout << "field,re,im\n";
        for (const char* f : {"zeta", "t", "Y", "u", "Q_scat", "Q_total"})
            std::cout << f << "," << csv_num(out[f]["re"].get<double>()) << ","
                      << csv_num(out[f]["im"].get<double>()) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_farfield(const CliOpts& o) {
    std::vector<double> grid;
    if (o.grid.empty()) {
        for (int k = 0; k < 73; ++k) grid.push_back(2.0 * M_PI * k / 72.0);
    } else if (!parse_grid(o.grid, grid)) {
        return usage_error("--grid expects 'start:stop:count', got '" + o.grid +
                           "'");
    }

    const FarFieldTable table = farfield_sweep(grid, o.cfg);
    json rows = json::array();
    for (const FarFieldRow& r : table.rows) {
        json row = {{"theta", r.theta}, {"flag", r.flag}};
        row["D"] = r.flag.empty() ? cplx_json(r.D) : json(nullptr);
        rows.push_back(row);
    }
    json out = document(o, "farfield");
    out["eps_ladder"] = table.eps_ladder;
    out["max_residual"] = table.max_residual;
    out["rows"] = rows;
    if (!all_finite(out)) return fail_nonfinite();

    if (o.format == "csv") {
        print_csv_manifest(o, "farfield");
        std::cout << "theta,re(D),im(D),flag\n";
        for (const json& row : rows) {
            std::cout << csv_num(row["theta"].get<double>()) << ",";
            if (row["D"].is_null())
                std::cout << ",";
            else
                std::cout << csv_num(row["D"]["re"].get<double>()) << ","
                          << csv_num(row["D"]["im"].get<double>());
            std::cout << "," << row["flag"].get<std::string>() << "\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_tables(const CliOpts& o) {
    const SpectralSolution sol = assemble(o.cfg);
    json recs = json::array();
    for (const LabelData& d : sol.labels) {
        const Label& l = d.pole.label;
        recs.push_back({{"m", l.m},
                        {"sigma", l.sigma},
                        {"eps_w", l.eps_w},
                        {"j", l.j},
                        {"eps_j", l.eps_j},
                        {"t", cplx_json(d.pole.t)},
                        {"Y", cplx_json(d.pole.Y)},
                        {"u", cplx_json(d.pole.u.u)},
                        {"alpha", cplx_json(d.res.alpha)},
                        {"beta", cplx_json(d.res.beta)},
                        {"C", cplx_json(d.res.C)},
                        {"d", cplx_json(d.res.d)}});
    }
    json out = document(o, "tables");
    out["records"] = recs;
    if (!all_finite(out)) return fail_nonfinite();

    if (o.format == "csv") {
        print_csv_manifest(o, "tables");
        std::cout << "m,sigma,eps_w,j,eps_j";
        for (const char* f : {"t", "Y", "u", "alpha", "beta", "C", "d"})
            std::cout << ",re(" << f << "),im(" << f << ")";
        std::cout << "\n";
        for (const json& r : recs) {
            std::cout << r["m"] << "," << r["sigma"] << "," << r["eps_w"] << ","
                      << r["j"] << "," << r["eps_j"];
            for (const char* f : {"t", "Y", "u", "alpha", "beta", "C", "d"})
                std::cout << "," << csv_num(r[f]["re"].get<double>()) << ","
                          << csv_num(r[f]["im"].get<double>());
            std::cout << "\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const CliOpts& o) {
    std::cout << document(o, "verify").dump() << "\n";
    const auto results = run_acceptance(o.cfg, o.seed);
    std::string first;
    for (const CheckResult& r : results) {
        std::cout << json{{"check", r.name},
                          {"passed", r.passed},
                          {"detail", r.detail}}
                         .dump()
                  << "\n";
        if (!r.passed && first.empty()) first = r.name + ": " + r.detail;
    }
    json summary = {{"passed", all_passed(results)}};
    if (!first.empty()) summary["first_failure"] = first;
    std::cout << summary.dump() << "\n";
    return all_passed(results) ? 0 : 1;
}

int cmd_reciprocity(const CliOpts& o) {
    std::vector<double> grid;
    if (o.grid.empty()) {
        for (int k = 0; k < 13; ++k) grid.push_back((2 * k + 1) * M_PI / 13.0);
    } else if (!parse_grid(o.grid, grid)) {
        return usage_error("--grid expects 'start:stop:count', got '" + o.grid +
                           "'");
    }

    const ReciprocityReport rep = reciprocity_report(grid, o.cfg);
    json delta = json::array();
    for (const auto& row : rep.delta) {
        json jr = json::array();
        for (double v : row)
            jr.push_back(std::isfinite(v) ? json(v) : json(nullptr));
        delta.push_back(jr);
    }
    json out = document(o, "reciprocity");
    out["grid"] = rep.grid;
    out["delta"] = delta;
    out["max_delta"] = rep.max_delta;
    out["mean_delta"] = rep.mean_delta;
    out["refused_pairs"] = rep.refused_pairs;
    if (!all_finite(out)) return fail_nonfinite();

    if (o.format == "csv") {
        print_csv_manifest(o, "reciprocity");
        std::cout << "theta_a,theta_b,delta,flag\n";
        for (size_t a = 0; a < rep.grid.size(); ++a)
            for (size_t b = 0; b < rep.grid.size(); ++b) {
                std::cout << csv_num(rep.grid[a]) << "," << csv_num(rep.grid[b])
                          << ",";
                if (std::isfinite(rep.delta[a][b]))
                    std::cout << csv_num(rep.delta[a][b]) << ",";
                else
                    std::cout << ",refused";
                std::cout << "\n";
            }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

void add_common(CLI::App* sub, CliOpts& o) {
    sub->add_option("--theta-i", o.cfg.theta_i, "incidence angle, radians");
    sub->add_option("--eps", o.cfg.eps, "spectral-pole displacement");
    sub->add_option("--k0", o.cfg.k0, "exterior wavenumber");
    sub->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_option("--tol-override", o.tol_overrides,
                    "tolerance override, key=value");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"penetrable right-angle wedge: spectral density and far field"};
    app.require_subcommand(1);
    CliOpts o;

    CLI::App* eval = app.add_subcommand("eval", "evaluate Q at one point");
    eval->add_option("--zeta", o.zeta, "evaluation point, 're,im'")->required();
    add_common(eval, o);

    CLI::App* farfield =
        app.add_subcommand("farfield", "diffraction coefficient over a grid");
    farfield->add_option("--grid", o.grid, "angles, 'start:stop:count'");
    add_common(farfield, o);

    CLI::App* tables =
        app.add_subcommand("tables", "per-pole residue records");
    add_common(tables, o);

    CLI::App* verify =
        app.add_subcommand("verify", "run the acceptance checks");
    add_common(verify, o);

    CLI::App* reciprocity =
        app.add_subcommand("reciprocity", "asymmetry of D under exchange");
    reciprocity->add_option("--grid", o.grid, "angles, 'start:stop:count'");
    add_common(reciprocity, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (int rc = apply_tol_overrides(o)) return rc;

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (farfield->parsed()) return cmd_farfield(o);
        if (tables->parsed()) return cmd_tables(o);
        if (verify->parsed()) return cmd_verify(o);
        if (reciprocity->parsed()) return cmd_reciprocity(o);
    } catch (const wedge_error& e) {
        std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "Unhandled"}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    }
    return 2;
}
