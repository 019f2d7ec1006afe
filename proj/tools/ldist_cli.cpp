// Command line front end: distortion bounds, image-curve lengths, the
// nine-row bounds table, and the experiment reports, with plain, csv, and
// json output. Exit codes: 0 success, 1 tolerance failure, 2 usage, domain,
// or I/O error.

#include <ldist/experiments.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitUsage = 2;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// writes to the path when given, else to stdout; throws on I/O failure
void emit(const std::optional<std::string>& out_path, const std::string& text) {
    if (!out_path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*out_path);
    if (!out) throw std::ios_base::failure("cannot open output file: " + *out_path);
    out << text;
    if (!out) throw std::ios_base::failure("write failed: " + *out_path);
}

json report_to_json(const ldist::ExperimentReport& report) {
    json doc;
    doc["id"] = report.id;
    doc["inputs"] = json::array();
    for (const auto& [name, value] : report.inputs)
        doc["inputs"].push_back({{"name", name}, {"value", value}});
    doc["checks"] = json::array();
    for (const auto& c : report.checks)
        doc["checks"].push_back({{"name", c.name},
                                 {"computed", c.computed},
                                 {"expected", c.expected},
                                 {"tolerance", c.tolerance},
                                 {"mode", c.mode},
                                 {"origin", c.origin},
                                 {"pass", c.pass}});
    if (!report.note.empty()) doc["note"] = report.note;
    doc["wall_time_seconds"] = report.wall_time_seconds;
    doc["pass"] = report.passed();
    return doc;
}

std::string report_to_csv(const ldist::ExperimentReport& report) {
    std::ostringstream out;
    out << "name,computed,expected,tolerance,mode,origin,pass\n";
    for (const auto& c : report.checks)
        out << c.name << ',' << fmt12(c.computed) << ',' << fmt12(c.expected) << ','
            << fmt12(c.tolerance) << ',' << c.mode << ',' << c.origin << ','
            << (c.pass ? "true" : "false") << '\n';
    return out.str();
}

std::string report_to_plain(const ldist::ExperimentReport& report) {
    std::ostringstream out;
    out << "experiment: " << report.id << '\n';
    if (!report.inputs.empty()) {
        out << "inputs:";
        for (const auto& [name, value] : report.inputs) out << ' ' << name << '=' << value;
        out << '\n';
    }
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "  computed=" << fmt6(c.computed)
            << "  expected=" << fmt6(c.expected) << "  tol=" << fmt6(c.tolerance) << " ("
            << c.mode << ")  [" << c.origin << "]\n";
    }
    if (!report.note.empty()) out << "note: " << report.note << '\n';
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << " (wall "
        << fmt6(report.wall_time_seconds) << " s)\n";
    return out.str();
}

std::string render_report(const ldist::ExperimentReport& report, const std::string& format) {
    if (format == "json") return report_to_json(report).dump(2) + "\n";
    if (format == "csv") return report_to_csv(report);
    return report_to_plain(report);
}

struct TableOutputRow {
    ldist::BoundRow row;
    double paper_m_star;
    double rel_err;
};

std::string table_to_output(const std::vector<TableOutputRow>& rows, const std::string& format,
                            bool pass) {
    std::ostringstream out;
    if (format == "csv") {
        out << "p,q_star,m_star,lower_bound,paper_m_star,rel_err\n";
        for (const auto& r : rows)
            out << fmt12(r.row.p) << ',' << fmt12(r.row.q_star) << ',' << fmt12(r.row.m_star)
                << ',' << fmt12(r.row.lower_bound) << ',' << fmt12(r.paper_m_star) << ','
                << fmt12(r.rel_err) << '\n';
        return out.str();
    }
    if (format == "json") {
        json doc;
        doc["command"] = "bounds table";
        doc["rows"] = json::array();
        for (const auto& r : rows)
            doc["rows"].push_back({{"p", r.row.p},
                                   {"q_star", r.row.q_star},
                                   {"m_star", r.row.m_star},
                                   {"lower_bound", r.row.lower_bound},
                                   {"paper_m_star", r.paper_m_star},
                                   {"rel_err", r.rel_err}});
        doc["pass"] = pass;
        return doc.dump(2) + "\n";
    }
    out << "    p      q_star       m_star  lower_bound  paper_m_star      rel_err\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof(line), "%5.3f  %10.6g  %11.6g  %11.6g  %12.6g  %11.3g\n",
                      r.row.p, r.row.q_star, r.row.m_star, r.row.lower_bound, r.paper_m_star,
                      r.rel_err);
        out << line;
    }
    return out.str();
}

int run_bounds_mp(double p, double q) {
    std::cout << fmt12(ldist::distortion_bound(p, q)) << '\n';
    return kExitPass;
}

int run_bounds_table(const std::string& format, const std::optional<std::string>& out_path) {
    auto [rows, report] = ldist::reproduce_table1();
    const auto& refs = ldist::table1_reference();
    std::vector<TableOutputRow> out_rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double rel = std::abs(rows[i].m_star - refs[i].m) / refs[i].m;
        out_rows.push_back(TableOutputRow{rows[i], refs[i].m, rel});
    }
    emit(out_path, table_to_output(out_rows, format, report.passed()));
    if (!report.passed()) {
        std::cerr << "bounds table: at least one row misses the reference tolerance\n";
        return kExitToleranceFailure;
    }
    return kExitPass;
}

int run_length(const std::string& map_name, double p, bool p_given,
               const std::string& curve_name, double rel_tol, bool truncated,
               std::vector<double> eps_list) {
    using namespace ldist;
    const bool is_kp = map_name == "kp";
    if (is_kp && !p_given) throw std::domain_error("--map kp requires --p");
    const AnalyticMap map = is_kp ? AnalyticMap::kp(p) : AnalyticMap::f0();

    if (!is_kp && curve_name == "I") {
        // the image of the real diameter under f0 has infinite length
        if (!truncated)
            throw std::domain_error(
                "the image of the diameter under f0 has infinite length; "
                "use --truncated (with --eps) for truncated lengths");
        if (eps_list.empty()) eps_list = {1e-2, 1e-4, 1e-6};
        bool all_converged = true;
        for (const auto& [eps, len] : truncated_length(map, real_segment(-1.0, 1.0), eps_list,
                                                       rel_tol)) {
            std::cout << fmt12(eps) << ' ' << fmt12(len.value) << ' ' << fmt12(len.error_bound)
                      << '\n';
            all_converged = all_converged && len.converged;
        }
        if (!all_converged) {
            std::cerr << "length: quadrature budget exhausted before reaching rel-tol\n";
            return kExitToleranceFailure;
        }
        return kExitPass;
    }

    if (truncated) throw std::domain_error("--truncated only applies to --map f0 --curve I");

    ParamCurve curve = curve_name == "I"        ? diameter_I()
                       : curve_name == "Cprime" ? semicircle_Cprime()
                                                : upper_semicircle();
    const LengthResult len = arc_length(map, curve, rel_tol);
    std::cout << fmt12(len.value) << ' ' << fmt12(len.error_bound) << '\n';
    if (!len.converged) {
        std::cerr << "length: quadrature budget exhausted before reaching rel-tol\n";
        return kExitToleranceFailure;
    }
    return kExitPass;
}

int run_experiment(const std::string& name, const std::vector<double>& p_values, double theta,
                   double alpha1_arg, double p1, double rel_tol, const std::string& format,
                   const std::optional<std::string>& out_path) {
    using namespace ldist;
    const auto require_p = [&]() {
        if (p_values.empty())
            throw std::domain_error("experiment " + name + " requires --p");
        return p_values.front();
    };

    ExperimentReport report;
    if (name == "table1") {
        report = reproduce_table1().second;
    } else if (name == "extremal") {
        report = verify_extremal(require_p(), rel_tol);
    } else if (name == "f0") {
        report = f0_divergence();
    } else if (name == "theorem2") {
        report = theorem2_reduction(std::polar(1.0, alpha1_arg), p1);
    } else if (name == "corollary") {
        report = corollary_sector(require_p(), theta);
    } else if (name == "conjecture") {
        if (p_values.empty()) throw std::domain_error("experiment conjecture requires --p");
        report = conjecture_probe(p_values);
    }
    emit(out_path, render_report(report, format));
    return report.passed() ? kExitPass : kExitToleranceFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"length-distortion toolkit: bounds, image-curve lengths, and experiments"};
    app.require_subcommand(1);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "distortion-bound constants");
    bounds->require_subcommand(1);
    double mp_p = 0.0, mp_q = 0.0;
    auto* mp = bounds->add_subcommand("mp", "evaluate the distortion bound at (p, q)");
    mp->add_option("--p", mp_p, "pole position in (sqrt(2)-1, 1)")->required();
    mp->add_option("--q", mp_q, "block ratio, q > 1")->required();

    std::string table_format = "plain";
    std::optional<std::string> table_out;
    auto* table = bounds->add_subcommand("table", "reproduce the nine-row bounds table");
    table->add_option("--format", table_format, "plain, csv, or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    table->add_option("--out", table_out, "write to a file instead of stdout");

    // length
    std::string length_map, length_curve;
    double length_p = 0.5, length_rel_tol = 1e-10;
    bool length_truncated = false;
    std::vector<double> length_eps;
    auto* length = app.add_subcommand("length", "arc length of an image curve");
    length->add_option("--map", length_map, "kp or f0")
        ->required()
        ->check(CLI::IsMember({"kp", "f0"}));
    length->add_option("--p", length_p, "pole position for kp");
    length->add_option("--curve", length_curve, "I, Cprime, or upper")
        ->required()
        ->check(CLI::IsMember({"I", "Cprime", "upper"}));
    length->add_option("--rel-tol", length_rel_tol, "relative tolerance (default 1e-10)");
    length->add_flag("--truncated", length_truncated,
                     "truncated lengths toward the singular endpoint (f0 on I)");
    length->add_option("--eps", length_eps, "decreasing truncation distances")
        ->delimiter(',');

    // experiment
    std::string exp_name, exp_format = "plain";
    std::optional<std::string> exp_out;
    std::vector<double> exp_p;
    double exp_theta = 0.0, exp_alpha1_arg = 1.5707963267948966, exp_p1 = 0.5,
           exp_rel_tol = 1e-8;
    auto* experiment = app.add_subcommand("experiment", "run a named experiment report");
    experiment->add_option("--name", exp_name, "experiment name")
        ->required()
        ->check(CLI::IsMember({"table1", "extremal", "f0", "theorem2", "corollary",
                               "conjecture"}));
    experiment->add_option("--p", exp_p, "pole position(s)")->delimiter(',');
    experiment->add_option("--theta", exp_theta, "rotation angle in radians (corollary)");
    experiment->add_option("--alpha1-arg", exp_alpha1_arg,
                           "argument of the boundary anchor e^{i theta}, theta in (0, pi)");
    experiment->add_option("--p1", exp_p1, "pole position before reduction (theorem2)");
    experiment->add_option("--rel-tol", exp_rel_tol, "relative tolerance (extremal)");
    experiment->add_option("--format", exp_format, "plain, csv, or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    experiment->add_option("--out", exp_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (mp->parsed()) return run_bounds_mp(mp_p, mp_q);
        if (table->parsed()) return run_bounds_table(table_format, table_out);
        if (length->parsed())
            return run_length(length_map, length_p, length->count("--p") > 0, length_curve,
                              length_rel_tol, length_truncated, length_eps);
        if (experiment->parsed())
            return run_experiment(exp_name, exp_p, exp_theta, exp_alpha1_arg, exp_p1,
                                  exp_rel_tol, exp_format, exp_out);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "ldist: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ldist::PoleProximityError& e) {
        std::cerr << "ldist: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "ldist: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ldist: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "ldist: internal error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
