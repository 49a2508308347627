// SPDX-License-Identifier: Apache-2.0
#include "copo/cli.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "copo/bench.hpp"
#include "copo/cones.hpp"
#include "copo/detector.hpp"
#include "copo/hypergraph.hpp"
#include "copo/io.hpp"
#include "copo/physics.hpp"

namespace copo::cli {

namespace {

using nlohmann::json;

struct CommonOpts {
    bool json_out = false;
    bool no_timing = false;
    bool parallel = false;
    std::string cone = "zsplit";
    std::size_t max_iter = 100;
    double power_tol = 1e-10;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_flag("--json", o.json_out, "emit a JSON report");
    cmd->add_flag("--no-timing", o.no_timing, "omit wall times from reports");
    cmd->add_flag("--parallel", o.parallel,
                  "evaluate search nodes on a thread pool (same verdict and stats)");
    cmd->add_option("--cone", o.cone, "pruning cone: nn or zsplit")
        ->check(CLI::IsMember({"nn", "zsplit"}));
    cmd->add_option("--max-iter", o.max_iter, "detector iteration budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", o.power_tol, "power-iteration convergence gap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "RNG seed (used by bench)");
}

DetectorConfig detector_config(const CommonOpts& o) {
    DetectorConfig cfg;
    cfg.cone = o.cone == "nn" ? ConeKind::NonNeg : ConeKind::ZSplit;
    cfg.max_iterations = o.max_iter;
    cfg.power.tol = o.power_tol;
    cfg.parallel = o.parallel;
    return cfg;
}

int status_exit_code(Status s) {
    switch (s) {
        case Status::Copositive:
            return 0;
        case Status::NotCopositive:
            return 1;
        default:
            return 2;
    }
}

json verdict_to_json(const Verdict& v, bool timing) {
    json j;
    j["status"] = status_name(v.status);
    j["witness"] = nullptr;
    if (v.witness) j["witness"] = *v.witness;
    j["iterations"] = v.stats.iterations;
    j["simplices"] = v.stats.simplices_checked;
    j["max_depth"] = v.stats.max_depth;
    if (timing) j["wall_time_ms"] = v.stats.wall_time_ms;
    return j;
}

void print_verdict_plain(std::ostream& out, const Verdict& v, bool timing) {
    out << "status: " << status_name(v.status) << '\n';
    if (v.witness) {
        out << "witness:";
        for (double x : *v.witness) out << ' ' << x;
        out << '\n';
    }
    out << "iterations: " << v.stats.iterations << '\n';
    out << "simplices: " << v.stats.simplices_checked << '\n';
    out << "max_depth: " << v.stats.max_depth << '\n';
    if (v.status == Status::Undecided) {
        out << "remaining_diameter: " << v.stats.remaining_diameter << '\n';
    }
    if (timing) out << "wall_time_ms: " << v.stats.wall_time_ms << '\n';
}

// ---- check ---------------------------------------------------------------

struct CheckOpts {
    CommonOpts common;
    std::string tensor_file;
    double vertex_tol = 0.0;
};

int run_check(const CheckOpts& o, std::ostream& out) {
    const SymTensor a = io::read_tensor(o.tensor_file);
    DetectorConfig cfg = detector_config(o.common);
    cfg.vertex_tol = o.vertex_tol;
    const Verdict v = detect(a, cfg);
    if (o.common.json_out) {
        out << verdict_to_json(v, !o.common.no_timing).dump(2) << '\n';
    } else {
        print_verdict_plain(out, v, !o.common.no_timing);
    }
    return status_exit_code(v.status);
}

// ---- coclique --------------------------------------------------------------

struct CocliqueOpts {
    CommonOpts common;
    std::string graph_file;
};

int run_coclique(const CocliqueOpts& o, std::ostream& out) {
    const UniformHypergraph g = io::read_hypergraph(o.graph_file);
    const CocliqueReport report = coclique_upper_bound(g, detector_config(o.common));
    if (o.common.json_out) {
        json j;
        j["bound"] = report.bound;
        j["per_k"] = json::array();
        for (const auto& [k, v] : report.per_k) {
            json row = verdict_to_json(v, !o.common.no_timing);
            row["k"] = k;
            j["per_k"].push_back(std::move(row));
        }
        out << j.dump(2) << '\n';
    } else {
        out << "coclique bound: " << report.bound << '\n';
        for (const auto& [k, v] : report.per_k) {
            out << "  k=" << k << ": " << status_name(v.status) << " (iterations "
                << v.stats.iterations << ")\n";
        }
    }
    return 0;
}

// ---- vacuum ----------------------------------------------------------------

struct VacuumOpts {
    CommonOpts common;
    QuarticCouplings couplings;
    std::size_t rho_points = 21;
    std::string mode = "paper";
    std::string table_file;
};

json analytic_to_json(const AnalyticStability& a) {
    json j;
    j["h1_sq"] = a.h1_sq;
    j["h2_sq"] = a.h2_sq;
    j["s_sq"] = a.s_sq;
    j["rho"] = a.rho;
    j["rho_imaginary"] = a.rho_imaginary;
    j["v_min"] = a.v_min;
    j["t"] = a.t;
    j["degenerate"] = a.degenerate;
    return j;
}

std::string rho_display(const AnalyticStability& a) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%s", a.rho, a.rho_imaginary ? "i" : "");
    return buf;
}

json couplings_to_json(const QuarticCouplings& c) {
    return json{{"l1", c.l1},   {"l2", c.l2},   {"ls", c.ls},     {"l3", c.l3},
                {"l4", c.l4},   {"ls1", c.ls1}, {"ls2", c.ls2},   {"ls12", c.ls12}};
}

QuarticCouplings couplings_from_json(const json& row) {
    QuarticCouplings c;
    const std::pair<const char*, double*> fields[] = {
        {"l1", &c.l1},   {"l2", &c.l2},   {"ls", &c.ls},   {"l3", &c.l3},
        {"l4", &c.l4},   {"ls1", &c.ls1}, {"ls2", &c.ls2}, {"ls12", &c.ls12},
    };
    for (const auto& [key, dst] : fields) {
        if (!row.contains(key) || !row[key].is_number()) {
            throw io::ParseError(std::string("coupling row needs numeric \"") + key + "\"");
        }
        *dst = row[key].get<double>();
    }
    return c;
}

int run_vacuum(const VacuumOpts& o, std::ostream& out, std::ostream& err) {
    const CouplingMode mode =
        o.mode == "monomial" ? CouplingMode::Monomial : CouplingMode::Listed;
    const std::vector<double> grid = uniform_rho_grid(o.rho_points);
    const DetectorConfig cfg = detector_config(o.common);

    auto scan = [&](const QuarticCouplings& c) {
        for (const std::string& w : c.perturbativity_warnings()) {
            err << "warning: " << w << '\n';
        }
        return vacuum_stability(c, cfg, grid, mode);
    };

    if (!o.table_file.empty()) {
        std::ifstream in(o.table_file);
        if (!in) throw io::ParseError("cannot open " + o.table_file);
        json rows;
        try {
            in >> rows;
        } catch (const json::exception& e) {
            throw io::ParseError(o.table_file + ": " + e.what());
        }
        if (!rows.is_array()) throw io::ParseError("coupling table must be a JSON array");

        json jrows = json::array();
        if (!o.common.json_out) {
            out << "    l1    l2    ls    l3    l4   ls1   ls2  ls12 |  h1^2  h2^2   s^2"
                   "   rho  v_min | result\n";
        }
        for (const auto& row : rows) {
            const QuarticCouplings c = couplings_from_json(row);
            const StabilityReport r = scan(c);
            if (o.common.json_out) {
                json jr = couplings_to_json(c);
                jr["analytic"] = analytic_to_json(r.analytic);
                jr["result"] = stability_name(r.result);
                jrows.push_back(std::move(jr));
            } else {
                char buf[256];
                std::snprintf(buf, sizeof(buf),
                              "%6.2f%6.2f%6.2f%6.2f%6.2f%6.2f%6.2f%6.2f |%6.2f%6.2f%6.2f%6s%7.2f"
                              " | %s\n",
                              c.l1, c.l2, c.ls, c.l3, c.l4, c.ls1, c.ls2, c.ls12, r.analytic.h1_sq,
                              r.analytic.h2_sq, r.analytic.s_sq, rho_display(r.analytic).c_str(),
                              r.analytic.v_min, stability_name(r.result));
                out << buf;
            }
        }
        if (o.common.json_out) {
            out << json{{"schema", 1}, {"rows", std::move(jrows)}}.dump(2) << '\n';
        }
        return 0;
    }

    const StabilityReport r = scan(o.couplings);
    if (o.common.json_out) {
        json j;
        j["schema"] = 1;
        j["result"] = stability_name(r.result);
        j["analytic"] = analytic_to_json(r.analytic);
        j["per_rho"] = json::array();
        for (const auto& [rho, v] : r.per_rho) {
            json row = verdict_to_json(v, !o.common.no_timing);
            row["rho"] = rho;
            j["per_rho"].push_back(std::move(row));
        }
        out << j.dump(2) << '\n';
    } else {
        const AnalyticStability& a = r.analytic;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "analytic: h1^2=%.4f h2^2=%.4f s^2=%.4f rho=%s v_min=%.4f\n", a.h1_sq,
                      a.h2_sq, a.s_sq, rho_display(a).c_str(), a.v_min);
        out << buf;
        std::size_t yes = 0, no = 0, und = 0;
        for (const auto& [rho, v] : r.per_rho) {
            (v.status == Status::Copositive      ? yes
             : v.status == Status::NotCopositive ? no
                                                 : und)++;
        }
        out << "rho grid: " << r.per_rho.size() << " points, " << yes << " Copositive, " << no
            << " NotCopositive, " << und << " Undecided\n";
        out << "result: " << stability_name(r.result) << '\n';
    }
    switch (r.result) {
        case Stability::Yes:
            return 0;
        case Stability::No:
            return 1;
        default:
            return 2;
    }
}

// ---- bench -----------------------------------------------------------------

struct BenchOpts {
    CommonOpts common;
    BenchSpec spec;
};

int run_bench_cmd(const BenchOpts& o, std::ostream& out) {
    DetectorConfig cfg = detector_config(o.common);
    BenchSpec spec = o.spec;
    spec.seed = o.common.seed;
    const BenchReport report = run_bench(spec, cfg);

    if (o.common.json_out) {
        json j;
        j["schema"] = 1;
        j["rng"] = "mt19937_64+u53";
        j["m"] = spec.order;
        j["n"] = spec.dim;
        j["eta_offset"] = spec.eta_offset;
        j["trials"] = spec.trials;
        j["seed"] = spec.seed;
        j["cone"] = o.common.cone;
        j["n_yes"] = report.n_yes;
        j["n_no"] = report.n_no;
        j["n_undecided"] = report.n_undecided;
        j["results"] = json::array();
        for (const BenchTrial& t : report.trials) {
            json row;
            row["rho"] = t.rho;
            row["verdict"] = status_name(t.verdict);
            row["iterations"] = t.iterations;
            if (!o.common.no_timing) row["wall_time_ms"] = t.wall_time_ms;
            j["results"].push_back(std::move(row));
        }
        out << j.dump(2) << '\n';
    } else {
        out << "bench m=" << spec.order << " n=" << spec.dim << " eta=rho"
            << (spec.eta_offset >= 0 ? "+" : "") << spec.eta_offset << " seed=" << spec.seed
            << '\n';
        for (std::size_t i = 0; i < report.trials.size(); ++i) {
            const BenchTrial& t = report.trials[i];
            out << "  trial " << i + 1 << ": rho=" << t.rho << ' ' << status_name(t.verdict)
                << " (iterations " << t.iterations << ")";
            if (!o.common.no_timing) out << " [" << t.wall_time_ms << " ms]";
            out << '\n';
        }
        out << "Nyes=" << report.n_yes << " Nno=" << report.n_no
            << " Nundecided=" << report.n_undecided << '\n';
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"copositivity tests for symmetric tensors, hypergraph coclique bounds,"
                 " and scalar-potential stability"};
    app.require_subcommand(1);

    CheckOpts check;
    CLI::App* check_cmd = app.add_subcommand("check", "test a tensor file for copositivity");
    add_common(check_cmd, check.common);
    check_cmd->add_option("--tensor", check.tensor_file, "tensor JSON file")->required();
    check_cmd->add_option("--vertex-tol", check.vertex_tol,
                          "witness needs a form value below -vertex-tol");

    CocliqueOpts coclique;
    CLI::App* coclique_cmd =
        app.add_subcommand("coclique", "upper-bound the coclique number of a hypergraph");
    add_common(coclique_cmd, coclique.common);
    coclique_cmd->add_option("--graph", coclique.graph_file, "hypergraph JSON file")->required();

    VacuumOpts vacuum;
    CLI::App* vacuum_cmd =
        app.add_subcommand("vacuum", "test vacuum stability of the quartic potential");
    add_common(vacuum_cmd, vacuum.common);
    vacuum_cmd->add_option("--l1", vacuum.couplings.l1, "coupling lambda_1");
    vacuum_cmd->add_option("--l2", vacuum.couplings.l2, "coupling lambda_2");
    vacuum_cmd->add_option("--ls", vacuum.couplings.ls, "coupling lambda_S");
    vacuum_cmd->add_option("--l3", vacuum.couplings.l3, "coupling lambda_3");
    vacuum_cmd->add_option("--l4", vacuum.couplings.l4, "coupling lambda_4");
    vacuum_cmd->add_option("--ls1", vacuum.couplings.ls1, "coupling lambda_S1");
    vacuum_cmd->add_option("--ls2", vacuum.couplings.ls2, "coupling lambda_S2");
    vacuum_cmd->add_option("--ls12", vacuum.couplings.ls12, "coupling lambda_S12");
    vacuum_cmd->add_option("--rho-points", vacuum.rho_points, "rho grid resolution")
        ->check(CLI::PositiveNumber);
    vacuum_cmd->add_option("--mode", vacuum.mode, "entry table for the mixed term")
        ->check(CLI::IsMember({"paper", "monomial"}));
    vacuum_cmd->add_option("--table", vacuum.table_file,
                           "JSON array of coupling rows; emits a stability table");

    BenchOpts bench;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "seeded random shifted-identity benchmark");
    add_common(bench_cmd, bench.common);
    bench_cmd->add_option("--m", bench.spec.order, "tensor order")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--n", bench.spec.dim, "tensor dimension")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--eta-offset", bench.spec.eta_offset, "eta = rho(B) + offset");
    bench_cmd->add_option("--trials", bench.spec.trials, "number of trials")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (check_cmd->parsed()) return run_check(check, out);
        if (coclique_cmd->parsed()) return run_coclique(coclique, out);
        if (vacuum_cmd->parsed()) return run_vacuum(vacuum, out, err);
        return run_bench_cmd(bench, out);
    } catch (const io::ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace copo::cli
