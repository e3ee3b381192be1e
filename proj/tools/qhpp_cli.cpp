// Command-line front end: resolution and adjunction of cyclic quotient
// singularities, fixed-point solving, fiber-configuration enumeration, and
// the scenario replay runner. Exit codes: 0 success, 1 expectation failure,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qhpp/qhpp.hpp"
#include "qhpp/report_json.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qhpp::ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_resolve(const std::vector<std::string>& literals, bool structured) {
    ordered_json out = ordered_json::array();
    for (const auto& literal : literals) {
        auto s = qhpp::parse_singularity(literal);
        auto chain = qhpp::hj_resolve(s);
        if (structured) {
            ordered_json j;
            j["singularity"] = s.to_string();
            j["chain"] = chain.self_intersections();
            j["determinant"] = chain.determinant().str();
            j["group_order"] = s.order();
            out.push_back(std::move(j));
        } else {
            std::cout << s.to_string() << ": chain " << chain.to_string() << ", determinant "
                      << chain.determinant().str() << ", group order " << s.order() << "\n";
        }
    }
    if (structured) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_adjunction(const std::vector<std::string>& literals, bool structured) {
    ordered_json out = ordered_json::array();
    for (const auto& literal : literals) {
        auto s = qhpp::parse_singularity(literal);
        auto chain = qhpp::hj_resolve(s);
        auto d = qhpp::discrepancy(chain);
        std::string coeffs = "(";
        for (std::size_t k = 0; k < d.coefficients.size(); ++k) {
            coeffs += qhpp::to_string(d.coefficients[k]);
            if (k + 1 < d.coefficients.size()) coeffs += ",";
        }
        coeffs += ")";
        if (structured) {
            ordered_json j;
            j["singularity"] = s.to_string();
            j["chain"] = chain.self_intersections();
            j["coefficients"] = ordered_json::array();
            for (const auto& c : d.coefficients) j["coefficients"].push_back(qhpp::to_string(c));
            j["self_square"] = qhpp::to_string(d.self_square);
            j["rational_double_point"] = qhpp::is_rational_double_point(s);
            out.push_back(std::move(j));
        } else {
            std::cout << s.to_string() << ": chain " << chain.to_string() << ", coefficients "
                      << coeffs << ", D^2 = " << qhpp::to_string(d.self_square)
                      << (qhpp::is_rational_double_point(s) ? ", rational double point"
                                                            : ", nonzero discrepancy")
                      << "\n";
        }
    }
    if (structured) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_lefschetz(int p, const std::string& lhs, std::int64_t total,
                  const std::vector<std::string>& curve_args, bool structured) {
    qhpp::LefschetzProblem prob;
    prob.p = p;
    prob.lhs = qhpp::parse_rational(lhs);
    prob.total_isolated = total;
    for (const auto& term : curve_args) {
        auto colon = term.find(':');
        if (colon == std::string::npos)
            throw qhpp::ParseError("curve must be genus:self_square, got '" + term + "'");
        prob.curves.push_back({std::stoll(term.substr(0, colon)), std::stoll(term.substr(colon + 1))});
    }
    auto solutions = qhpp::solve_fixed_points(prob);
    if (structured) {
        ordered_json j;
        j["p"] = p;
        j["lhs"] = lhs;
        j["total_isolated"] = total;
        j["solutions"] = ordered_json::array();
        for (const auto& s : solutions) j["solutions"].push_back(s.counts);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << solutions.size() << " solution" << (solutions.size() == 1 ? "" : "s")
                  << " for p=" << p << ", lhs=" << lhs << ", total=" << total << ":\n";
        for (const auto& s : solutions) std::cout << "  " << s.to_string() << "\n";
    }
    return 0;
}

int run_fibers(int euler, int budget, const std::string& chains, const std::string& multisection,
               bool structured) {
    std::optional<qhpp::Multisection> ms;
    if (!multisection.empty()) ms = qhpp::detail::parse_multisection(multisection);
    auto configs = qhpp::enumerate_configurations(
        euler, budget, qhpp::detail::parse_chain_spec(chains.empty() ? "none" : chains), ms);
    if (structured) {
        ordered_json j;
        j["target_euler"] = euler;
        j["rank_budget"] = budget;
        j["configurations"] = ordered_json::array();
        for (const auto& c : configs) {
            ordered_json item;
            item["fibers"] = c.to_string();
            item["rank_contribution"] = c.rank_contribution();
            if (!c.multisection_note.empty()) item["multisection_note"] = c.multisection_note;
            j["configurations"].push_back(std::move(item));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << configs.size() << " configuration" << (configs.size() == 1 ? "" : "s")
                  << " with total Euler number " << euler << ":\n";
        for (const auto& c : configs) {
            std::cout << "  " << c.to_string() << " (rank " << c.rank_contribution() << ")";
            if (!c.multisection_note.empty()) std::cout << " [" << c.multisection_note << "]";
            std::cout << "\n";
        }
    }
    return 0;
}

int emit_reports(const std::vector<qhpp::Report>& reports, bool structured) {
    bool all_passed = true;
    if (structured) {
        ordered_json j = ordered_json::array();
        for (const auto& report : reports) {
            j.push_back(qhpp::report_json(report));
            all_passed = all_passed && report.passed;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& report : reports) {
            std::cout << report.to_text() << "\n";
            all_passed = all_passed && report.passed;
        }
    }
    return all_passed ? 0 : 1;
}

qhpp::Report run_by_name_or_path(const std::string& target) {
    for (const auto& name : qhpp::list_builtin_scenarios())
        if (name == target) return qhpp::run_scenario_text(qhpp::builtin_scenario_text(target));
    return qhpp::run_scenario_text(read_file(target));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for quotient singularities, branched covers, "
                 "fixed-point formulas and elliptic fiber configurations"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));

    auto* resolve = app.add_subcommand("resolve", "resolution chain of 1/n(1,q)");
    std::vector<std::string> resolve_args;
    resolve->add_option("singularity", resolve_args, "singularity literals like 1/7(1,5)")->required();

    auto* adjunction = app.add_subcommand("adjunction", "discrepancy divisors of 1/n(1,q)");
    std::vector<std::string> adjunction_args;
    adjunction->add_option("singularity", adjunction_args, "singularity literals")->required();

    auto* cover = app.add_subcommand("cover", "run a scenario file of cover stanzas");
    std::string cover_file;
    cover->add_option("file", cover_file, "scenario file")->required();

    auto* lefschetz = app.add_subcommand("lefschetz", "solve the averaged fixed-point equation");
    int lf_p = 3;
    std::string lf_lhs;
    std::int64_t lf_total = 0;
    std::vector<std::string> lf_curves;
    lefschetz->add_option("p", lf_p, "prime order")->required();
    lefschetz->add_option("lhs", lf_lhs, "rational left-hand side, e.g. 5/2")->required();
    lefschetz->add_option("total", lf_total, "number of isolated fixed points")->required();
    lefschetz->add_option("--curve", lf_curves, "fixed curve as genus:self_square (repeatable)");

    auto* fibers = app.add_subcommand("fibers", "enumerate singular fiber configurations");
    int fb_euler = 12, fb_budget = 8;
    std::string fb_chains, fb_multisection;
    fibers->add_option("euler", fb_euler, "total Euler number")->required();
    fibers->add_option("budget", fb_budget, "rank budget for fiber components")->required();
    fibers->add_option("chains", fb_chains, "required chains, e.g. \"A2 x4\"");
    fibers->add_option("--multisection", fb_multisection, "degree,self_square of a multisection");

    auto* scenario = app.add_subcommand("scenario", "scenario replay");
    auto* scenario_run = scenario->add_subcommand("run", "run scenarios by name or file");
    std::vector<std::string> scenario_targets;
    bool scenario_all = false;
    scenario_run->add_option("target", scenario_targets, "builtin name or scenario file path");
    scenario_run->add_flag("--all", scenario_all, "run every builtin scenario");
    auto* scenario_list = scenario->add_subcommand("list", "list builtin scenarios");
    scenario->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bool structured = format == "structured";
    try {
        if (*resolve) return run_resolve(resolve_args, structured);
        if (*adjunction) return run_adjunction(adjunction_args, structured);
        if (*cover) return emit_reports({run_by_name_or_path(cover_file)}, structured);
        if (*lefschetz) return run_lefschetz(lf_p, lf_lhs, lf_total, lf_curves, structured);
        if (*fibers) return run_fibers(fb_euler, fb_budget, fb_chains, fb_multisection, structured);
        if (*scenario_list) {
            if (structured) {
                ordered_json j = qhpp::list_builtin_scenarios();
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& name : qhpp::list_builtin_scenarios()) std::cout << name << "\n";
            }
            return 0;
        }
        if (*scenario_run) {
            std::vector<qhpp::Report> reports;
            if (scenario_all)
                for (const auto& name : qhpp::list_builtin_scenarios())
                    reports.push_back(qhpp::run_scenario_text(qhpp::builtin_scenario_text(name)));
            for (const auto& target : scenario_targets) reports.push_back(run_by_name_or_path(target));
            if (reports.empty()) throw qhpp::ParseError("nothing to run: give a name, a file, or --all");
            return emit_reports(reports, structured);
        }
    } catch (const qhpp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qhpp::ReferenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qhpp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
