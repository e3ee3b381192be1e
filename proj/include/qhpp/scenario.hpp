#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qhpp/covers.hpp"
#include "qhpp/kodaira.hpp"
#include "qhpp/ledger.hpp"
#include "qhpp/lefschetz.hpp"
#include "qhpp/reference_tables.hpp"

namespace qhpp {

// Line-oriented scenario format, one step per stanza:
//
//   scenario <name>
//
//   step <id> <op>
//   <key> <value ...>
//
//   expect <step-id> <field> <value ...>
//
// '#' starts a comment. Values of the form "@<id>" pass a previous step's
// object (ledgers); "@<id>:<field>" substitutes a previous step's output
// field as text. Back-references only point to earlier steps. Expectations
// are checked with exact string equality on the rendered fields; all
// arithmetic is exact, so there are no tolerances.

struct ScenarioStep {
    int id = 0;
    std::string op;
    std::vector<std::pair<std::string, std::string>> args;
};

struct Expectation {
    int step = 0;
    std::string field;
    std::string expected;
};

struct Scenario {
    std::string name;
    std::vector<ScenarioStep> steps;
    std::vector<Expectation> expectations;
};

struct StepRecord {
    int id = 0;
    std::string op;
    std::vector<std::pair<std::string, std::string>> fields;
    bool errored = false;

    std::optional<std::string> field(const std::string& key) const {
        for (const auto& [k, v] : fields)
            if (k == key) return v;
        return std::nullopt;
    }
};

struct ExpectationResult {
    Expectation expectation;
    std::string actual;
    bool passed = false;
};

struct Report {
    std::string scenario_name;
    std::vector<StepRecord> steps;
    std::vector<ExpectationResult> expectations;
    bool passed = true;

    // Full values on both sides of every expectation; never truncated.
    std::string to_text() const {
        std::ostringstream out;
        out << "=== scenario " << scenario_name << " ===\n";
        for (const auto& step : steps) {
            out << "[step " << step.id << "] " << step.op << "\n";
            for (const auto& [k, v] : step.fields) out << "  " << k << " = " << v << "\n";
        }
        for (const auto& e : expectations) {
            out << "[expect] step " << e.expectation.step << " " << e.expectation.field;
            if (e.passed)
                out << " = " << e.expectation.expected << " ... ok\n";
            else
                out << ": expected " << e.expectation.expected << ", actual " << e.actual
                    << " ... FAIL\n";
        }
        out << "status " << (passed ? "PASS" : "FAIL") << "\n";
        return out.str();
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(trim(s.substr(pos)));
            break;
        }
        out.push_back(trim(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

// Splits on commas outside parentheses, so "1/3(1,2) x3, 1/7(1,5)" keeps
// its literals intact.
inline std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string current;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(trim(current));
    return out;
}

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(s, &used);
        if (used != s.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("not an integer " + what + ": '" + s + "'");
    }
}

inline bool parse_bool(const std::string& s, const std::string& what) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError("not a boolean " + what + ": '" + s + "'");
}

// "1/3(1,2) x3, 1/7(1,5)" -> expanded singularity list; "none" -> empty.
inline std::vector<CyclicQuotientSingularity> parse_singularity_list(const std::string& text) {
    std::vector<CyclicQuotientSingularity> out;
    if (trim(text) == "none") return out;
    for (const auto& term : split_terms(text)) {
        if (term.empty()) throw ParseError("empty singularity term in '" + text + "'");
        std::string base = term;
        int count = 1;
        auto xpos = term.rfind(" x");
        if (xpos != std::string::npos && xpos + 2 < term.size()) {
            count = static_cast<int>(parse_int(term.substr(xpos + 2), "count"));
            base = trim(term.substr(0, xpos));
        }
        if (count < 1) throw ParseError("bad count in '" + term + "'");
        auto s = parse_singularity(base);
        for (int k = 0; k < count; ++k) out.push_back(s);
    }
    return out;
}

// "A2 x3", "1/7(1,5) x3", "(-2,-2,-3)": comma-separated chain terms.
inline std::vector<ExceptionalChain> parse_chain_spec(const std::string& text) {
    std::vector<ExceptionalChain> out;
    if (trim(text) == "none") return out;
    for (const auto& term : split_terms(text)) {
        if (term.empty()) throw ParseError("empty chain term in '" + text + "'");
        std::string base = term;
        int count = 1;
        auto xpos = term.rfind(" x");
        if (xpos != std::string::npos && xpos + 2 < term.size()) {
            count = static_cast<int>(parse_int(term.substr(xpos + 2), "count"));
            base = trim(term.substr(0, xpos));
        }
        ExceptionalChain chain = [&]() -> ExceptionalChain {
            if (!base.empty() && base[0] == 'A')
                return a_chain(static_cast<int>(parse_int(base.substr(1), "chain length")));
            return hj_resolve(parse_singularity(base));
        }();
        for (int k = 0; k < count; ++k) out.push_back(chain);
    }
    return out;
}

// Raw chain literals "(-2,-2,-3)" are only used by the CLI adjunction path.
inline ExceptionalChain parse_chain_literal(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 3 || t.front() != '(' || t.back() != ')')
        throw ParseError("not a chain literal: '" + text + "'");
    std::vector<std::int64_t> b;
    for (const auto& part : split(t.substr(1, t.size() - 2), ','))
        b.push_back(parse_int(part, "self-intersection"));
    return ExceptionalChain(std::move(b));
}

inline std::vector<int> parse_exponents(const std::string& text) {
    std::vector<int> out;
    if (trim(text) == "none") return out;
    for (const auto& term : split(text, ','))
        out.push_back(static_cast<int>(parse_int(term, "exponent")));
    return out;
}

// "deg=6,sq=-3" or plain "6,-3".
inline Multisection parse_multisection(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 2) throw ParseError("multisection must be deg=<d>,sq=<s>");
    auto strip = [](std::string s, const std::string& prefix) {
        if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
        return s;
    };
    return Multisection{static_cast<int>(parse_int(strip(parts[0], "deg="), "multisection degree")),
                        static_cast<int>(parse_int(strip(parts[1], "sq="), "multisection square"))};
}

inline std::string render_singularities(std::vector<CyclicQuotientSingularity> sing) {
    if (sing.empty()) return "none";
    std::sort(sing.begin(), sing.end());
    std::string s;
    for (std::size_t i = 0; i < sing.size();) {
        std::size_t j = i;
        while (j < sing.size() && sing[j] == sing[i]) ++j;
        if (!s.empty()) s += ", ";
        s += sing[i].to_string();
        if (j - i > 1) s += " x" + std::to_string(j - i);
        i = j;
    }
    return s;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string error_name(const Error& e) {
    if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
    if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
    if (dynamic_cast<const NonRationalResult*>(&e)) return "NonRationalResult";
    if (dynamic_cast<const BranchMismatch*>(&e)) return "BranchMismatch";
    if (dynamic_cast<const UnsupportedAction*>(&e)) return "UnsupportedAction";
    if (dynamic_cast<const InvalidChain*>(&e)) return "InvalidChain";
    if (dynamic_cast<const NoTripleCover*>(&e)) return "NoTripleCover";
    if (dynamic_cast<const BranchCountMismatch*>(&e)) return "BranchCountMismatch";
    if (dynamic_cast<const NonIntegralSolution*>(&e)) return "NonIntegralSolution";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const ReferenceError*>(&e)) return "ReferenceError";
    return "Error";
}

} // namespace detail

inline Scenario parse_scenario(const std::string& text) {
    Scenario scenario;
    std::istringstream in(text);
    std::string line;
    ScenarioStep* current = nullptr;
    std::vector<int> seen_ids;
    int lineno = 0;

    auto check_backrefs = [&](const std::string& value, int line_number, int current_id) {
        if (value.empty() || value[0] != '@') return;
        auto colon = value.find(':');
        std::string id_text = value.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
        std::int64_t id = detail::parse_int(id_text, "step reference");
        for (int prior : seen_ids)
            if (prior == id && prior != current_id) return;
        throw ReferenceError("line " + std::to_string(line_number) + ": reference " + value +
                             " does not point to an earlier step");
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string head;
        ls >> head;
        if (head == "scenario") {
            std::string name = detail::trim(t.substr(8));
            if (name.empty()) throw ParseError("line " + std::to_string(lineno) + ": scenario needs a name");
            scenario.name = name;
            current = nullptr;
        } else if (head == "step") {
            std::string id_text, op;
            ls >> id_text >> op;
            if (op.empty()) throw ParseError("line " + std::to_string(lineno) + ": step needs an id and an op");
            int id = static_cast<int>(detail::parse_int(id_text, "step id"));
            for (int prior : seen_ids)
                if (prior == id) throw ParseError("line " + std::to_string(lineno) + ": duplicate step id");
            scenario.steps.push_back({id, op, {}});
            current = &scenario.steps.back();
            seen_ids.push_back(id);
        } else if (head == "expect") {
            std::string id_text, field;
            ls >> id_text >> field;
            std::string rest;
            std::getline(ls, rest);
            rest = detail::trim(rest);
            if (field.empty() || rest.empty())
                throw ParseError("line " + std::to_string(lineno) + ": expect needs step, field, value");
            int id = static_cast<int>(detail::parse_int(id_text, "step id"));
            bool known = false;
            for (int prior : seen_ids) known = known || prior == id;
            if (!known)
                throw ReferenceError("line " + std::to_string(lineno) +
                                     ": expectation references unknown step " + id_text);
            scenario.expectations.push_back({id, field, rest});
            current = nullptr;
        } else {
            if (!current)
                throw ParseError("line " + std::to_string(lineno) + ": key-value line outside a step");
            std::string rest;
            std::getline(ls, rest);
            rest = detail::trim(rest);
            if (rest.empty()) throw ParseError("line " + std::to_string(lineno) + ": key '" + head +
                                               "' has no value");
            // validate references, except bare step ids handled at run time
            check_backrefs(rest, lineno, current->id);
            current->args.emplace_back(head, rest);
        }
    }
    if (scenario.name.empty()) throw ParseError("scenario file has no 'scenario <name>' header");
    return scenario;
}

namespace detail {

class ScenarioRunner {
public:
    Report run(const Scenario& scenario) {
        Report report;
        report.scenario_name = scenario.name;
        for (const auto& step : scenario.steps) {
            StepRecord record{step.id, step.op, {}, false};
            try {
                execute(step, record);
            } catch (const Error& e) {
                record.fields = {{"error", error_name(e)}, {"error_message", e.what()}};
                record.errored = true;
            } catch (const std::invalid_argument& e) {
                record.fields = {{"error", "InvalidArgument"}, {"error_message", e.what()}};
                record.errored = true;
            }
            records_[step.id] = record;
            report.steps.push_back(std::move(record));
        }
        for (const auto& expectation : scenario.expectations) {
            ExpectationResult result{expectation, "<missing>", false};
            auto it = records_.find(expectation.step);
            if (it != records_.end())
                if (auto value = it->second.field(expectation.field)) result.actual = *value;
            result.passed = result.actual == expectation.expected;
            report.passed = report.passed && result.passed;
            report.expectations.push_back(std::move(result));
        }
        return report;
    }

private:
    using Args = std::vector<std::pair<std::string, std::string>>;

    std::map<int, StepRecord> records_;
    std::map<int, SurfaceLedger> ledgers_;

    static std::optional<std::string> find(const Args& args, const std::string& key) {
        for (const auto& [k, v] : args)
            if (k == key) return v;
        return std::nullopt;
    }

    std::string arg(const Args& args, const std::string& key, const std::string& fallback) const {
        auto v = find(args, key);
        return v ? resolve(*v) : fallback;
    }

    std::string required(const Args& args, const std::string& key) const {
        auto v = find(args, key);
        if (!v) throw ParseError("missing argument '" + key + "'");
        return resolve(*v);
    }

    // "@id:field" -> text of that output field
    std::string resolve(const std::string& value) const {
        if (value.empty() || value[0] != '@') return value;
        auto colon = value.find(':');
        if (colon == std::string::npos) return value; // bare object reference
        int id = static_cast<int>(parse_int(value.substr(1, colon - 1), "step reference"));
        auto it = records_.find(id);
        if (it == records_.end())
            throw ReferenceError("reference " + value + " points to a missing step");
        auto field = it->second.field(value.substr(colon + 1));
        if (!field)
            throw ReferenceError("reference " + value + " names a field the step did not produce");
        return *field;
    }

    const SurfaceLedger& ledger_ref(const std::string& value) const {
        if (value.empty() || value[0] != '@' || value.find(':') != std::string::npos)
            throw ParseError("expected a step reference '@id', got '" + value + "'");
        int id = static_cast<int>(parse_int(value.substr(1), "step reference"));
        auto it = ledgers_.find(id);
        if (it == ledgers_.end())
            throw ReferenceError("reference " + value + " does not name a ledger-producing step");
        return it->second;
    }

    void emit_ledger(StepRecord& record, const SurfaceLedger& ledger) {
        ledgers_.insert_or_assign(record.id, ledger);
        DerivedInvariants derived = derived_invariants(ledger);
        record.fields.emplace_back("label", ledger.label);
        record.fields.emplace_back("k2", to_string(ledger.resolution_k2));
        record.fields.emplace_back("e", std::to_string(ledger.resolution_e));
        record.fields.emplace_back("pg", std::to_string(ledger.pg));
        record.fields.emplace_back("q", std::to_string(ledger.q));
        record.fields.emplace_back("sing", render_singularities(ledger.singularities));
        record.fields.emplace_back("sing_count", std::to_string(ledger.singularities.size()));
        record.fields.emplace_back("k2_singular", to_string(derived.k2_singular));
        record.fields.emplace_back("e_singular", std::to_string(derived.e_singular));
    }

    void execute(const ScenarioStep& step, StepRecord& record) {
        const Args& args = step.args;
        if (step.op == "ledger") {
            // "K2"/"k2" and "singularities"/"sing" are both accepted
            auto k2 = find(args, "k2");
            if (!k2) k2 = find(args, "K2");
            if (!k2) throw ParseError("missing argument 'k2'");
            auto sing = find(args, "singularities");
            if (!sing) sing = find(args, "sing");
            SurfaceLedger ledger(arg(args, "label", "surface"), parse_rational(resolve(*k2)),
                                 parse_int(required(args, "e"), "e"),
                                 parse_int(arg(args, "pg", "0"), "pg"),
                                 parse_int(arg(args, "q", "0"), "q"),
                                 parse_singularity_list(sing ? resolve(*sing) : "none"));
            emit_ledger(record, ledger);
        } else if (step.op == "resolve") {
            auto s = parse_singularity(required(args, "sing"));
            auto chain = hj_resolve(s);
            record.fields.emplace_back("sing", s.to_string());
            record.fields.emplace_back("chain", chain.to_string());
            record.fields.emplace_back("length", std::to_string(chain.length()));
            record.fields.emplace_back("det", chain.determinant().str());
        } else if (step.op == "adjunction") {
            auto s = parse_singularity(required(args, "sing"));
            auto chain = hj_resolve(s);
            auto d = discrepancy(chain);
            std::string coeffs = "(";
            for (std::size_t k = 0; k < d.coefficients.size(); ++k) {
                coeffs += to_string(d.coefficients[k]);
                if (k + 1 < d.coefficients.size()) coeffs += ",";
            }
            coeffs += ")";
            record.fields.emplace_back("sing", s.to_string());
            record.fields.emplace_back("chain", chain.to_string());
            record.fields.emplace_back("coefficients", coeffs);
            record.fields.emplace_back("d2", to_string(d.self_square));
            record.fields.emplace_back("rdp", bool_str(is_rational_double_point(s)));
        } else if (step.op == "derived") {
            auto derived = derived_invariants(ledger_ref(required(args, "ledger")));
            record.fields.emplace_back("k2_singular", to_string(derived.k2_singular));
            record.fields.emplace_back("e_singular", std::to_string(derived.e_singular));
            record.fields.emplace_back("e_smooth", std::to_string(derived.e_smooth_part));
        } else if (step.op == "qhpp") {
            auto r = qhpp_check(ledger_ref(required(args, "ledger")));
            record.fields.emplace_back("candidate", bool_str(r.is_qhpp_candidate));
            record.fields.emplace_back("b2_singular", std::to_string(r.b2_singular));
            record.fields.emplace_back("square_value", r.square_criterion_value.str());
            record.fields.emplace_back("square_holds", bool_str(r.square_criterion_holds));
            record.fields.emplace_back("square_applicable", bool_str(r.square_criterion_applicable));
        } else if (step.op == "scan") {
            auto rows = cusp_count_scan(static_cast<int>(parse_int(required(args, "kmax"), "kmax")));
            std::string table, squares;
            for (const auto& row : rows) {
                if (!table.empty()) table += " ";
                table += "k=" + std::to_string(row.k) + ":" + row.value.str() + ":" +
                         (row.is_square ? "yes" : "no");
                if (row.is_square) {
                    if (!squares.empty()) squares += ",";
                    squares += std::to_string(row.k);
                }
            }
            record.fields.emplace_back("table", table);
            record.fields.emplace_back("squares", squares);
        } else if (step.op == "discriminant") {
            auto cert = discriminant_certificate(
                static_cast<int>(parse_int(required(args, "p"), "p")),
                parse_chain_spec(required(args, "chains")),
                static_cast<int>(parse_int(required(args, "ambient"), "ambient rank")));
            record.fields.emplace_back("divisors", divisors_to_string(cert.elementary_divisors));
            record.fields.emplace_back("p_elementary", bool_str(cert.is_p_elementary));
            record.fields.emplace_back("length", std::to_string(cert.length));
            record.fields.emplace_back("complement_rank", std::to_string(cert.complement_rank));
            record.fields.emplace_back("glue_required", bool_str(cert.glue_required));
            std::string notes;
            for (const auto& note : cert.notes) {
                if (!notes.empty()) notes += " | ";
                notes += note;
            }
            record.fields.emplace_back("notes", notes);
        } else if (step.op == "cover") {
            CoverSpec spec{ledger_ref(required(args, "base")),
                           static_cast<int>(parse_int(arg(args, "degree", "1"), "degree")),
                           {},
                           {},
                           parse_int(arg(args, "pg", "0"), "pg"),
                           parse_int(arg(args, "q", "0"), "q"),
                           arg(args, "label", "")};
            for (const auto& idx : split(arg(args, "branch", "none"), ','))
                if (idx != "none" && !idx.empty())
                    spec.branch_indices.push_back(static_cast<int>(parse_int(idx, "branch index")));
            std::string preimage = arg(args, "preimage", "smooth");
            auto terms = split(preimage, ',');
            for (std::size_t k = 0; k < spec.branch_indices.size(); ++k) {
                std::string term = terms.size() == 1 ? terms[0] : terms.at(k);
                if (term == "smooth")
                    spec.preimage_types.push_back(std::nullopt);
                else
                    spec.preimage_types.push_back(parse_singularity(term));
            }
            emit_ledger(record, cover_invariants(spec));
        } else if (step.op == "quotient") {
            QuotientSpec spec{ledger_ref(required(args, "total")),
                              static_cast<int>(parse_int(arg(args, "degree", "1"), "degree")),
                              parse_singularity_list(arg(args, "fixed", "none")),
                              parse_int(arg(args, "pg", "0"), "pg"),
                              parse_int(arg(args, "q", "0"), "q"),
                              arg(args, "label", "")};
            emit_ledger(record, quotient_invariants(spec));
        } else if (step.op == "acoeff") {
            int p = static_cast<int>(parse_int(required(args, "p"), "p"));
            int i = static_cast<int>(parse_int(required(args, "i"), "i"));
            record.fields.emplace_back("value", to_string(lefschetz_coefficient(p, i)));
        } else if (step.op == "hlhs") {
            int p = static_cast<int>(parse_int(required(args, "p"), "p"));
            Rational value = averaged_holomorphic_trace_from_exponents(
                p, parse_exponents(arg(args, "h01", "none")), parse_exponents(arg(args, "h02", "none")));
            record.fields.emplace_back("value", to_string(value));
        } else if (step.op == "lefschetz") {
            LefschetzProblem prob;
            prob.p = static_cast<int>(parse_int(required(args, "p"), "p"));
            prob.lhs = parse_rational(required(args, "lhs"));
            prob.total_isolated = parse_int(required(args, "total"), "total");
            for (const auto& term : split(arg(args, "curves", "none"), ',')) {
                if (term == "none" || term.empty()) continue;
                auto parts = split(term, ':');
                if (parts.size() != 2) throw ParseError("curve term must be genus:self_square");
                prob.curves.push_back(
                    {parse_int(parts[0], "genus"), parse_int(parts[1], "self square")});
            }
            auto solutions = solve_fixed_points(prob);
            std::string rendered;
            for (const auto& s : solutions) {
                if (!rendered.empty()) rendered += "; ";
                rendered += s.to_string();
            }
            record.fields.emplace_back("count", std::to_string(solutions.size()));
            record.fields.emplace_back("solutions", rendered.empty() ? "none" : rendered);
        } else if (step.op == "hodge") {
            auto cases = enumerate_hodge_trace_cases(
                static_cast<int>(parse_int(required(args, "p"), "p")),
                parse_int(required(args, "pg"), "pg"), parse_int(required(args, "q"), "q"),
                parse_int(required(args, "h11"), "h11 rank"),
                parse_int(required(args, "forced"), "forced invariants"),
                parse_bool(arg(args, "forbid_free", "true"), "forbid_free"));
            auto filter = find(args, "filter_quotient_pg");
            if (filter) {
                std::int64_t want = parse_int(resolve(*filter), "filter_quotient_pg");
                std::vector<HodgeTraceCase> kept;
                for (const auto& c : cases)
                    if (c.quotient_pg == want) kept.push_back(c);
                cases = std::move(kept);
            }
            std::string rendered, eulers;
            std::vector<std::int64_t> tr11s, b2s;
            for (const auto& c : cases) {
                if (!rendered.empty()) rendered += "; ";
                rendered += "pg'=" + std::to_string(c.quotient_pg) + " q'=" +
                            std::to_string(c.quotient_q) + " tr1=" + std::to_string(c.tr_h1) +
                            " tr2=" + std::to_string(c.tr_h2) + " tr11=" + std::to_string(c.tr_h11) +
                            " e=" + std::to_string(c.euler_fixed) +
                            " b2inv=" + std::to_string(c.invariant_h2_rank);
                if (!eulers.empty()) eulers += ",";
                eulers += std::to_string(c.euler_fixed);
                tr11s.push_back(c.tr_h11);
                b2s.push_back(c.invariant_h2_rank);
            }
            auto unique_sorted = [](std::vector<std::int64_t> v) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
                std::string s;
                for (auto x : v) {
                    if (!s.empty()) s += ",";
                    s += std::to_string(x);
                }
                return s;
            };
            record.fields.emplace_back("count", std::to_string(cases.size()));
            record.fields.emplace_back("cases", rendered.empty() ? "none" : rendered);
            record.fields.emplace_back("eulers", eulers.empty() ? "none" : eulers);
            record.fields.emplace_back("tr11_set", unique_sorted(tr11s));
            record.fields.emplace_back("b2_set", unique_sorted(b2s));
        } else if (step.op == "fibers") {
            std::optional<Multisection> multisection;
            auto ms = find(args, "multisection");
            if (ms) multisection = parse_multisection(resolve(*ms));
            auto configs = enumerate_configurations(
                static_cast<int>(parse_int(required(args, "euler"), "euler")),
                static_cast<int>(parse_int(required(args, "budget"), "budget")),
                parse_chain_spec(arg(args, "chains", "none")), multisection);
            std::string rendered, note;
            for (const auto& c : configs) {
                if (!rendered.empty()) rendered += " | ";
                rendered += c.to_string();
                if (note.empty()) note = c.multisection_note;
            }
            record.fields.emplace_back("count", std::to_string(configs.size()));
            record.fields.emplace_back("configs", rendered.empty() ? "none" : rendered);
            record.fields.emplace_back("note", note.empty() ? "none" : note);
        } else if (step.op == "base_change") {
            FiberConfiguration config{parse_fiber_list(required(args, "config")), {}, ""};
            BaseChangePlan plan;
            plan.smooth_branch_points =
                static_cast<int>(parse_int(arg(args, "smooth_branch", "2"), "smooth branch points"));
            for (const auto& fate : split(required(args, "fates"), ','))
                plan.fates.push_back(parse_fiber_fate(fate));
            auto result = base_change_degree3(config, plan);
            std::string images;
            for (const auto& [from, to] : result.fiber_images) {
                if (!images.empty()) images += " | ";
                images += from + "->" + to;
            }
            record.fields.emplace_back("result", result.to_string());
            record.fields.emplace_back("images", images);
            record.fields.emplace_back("euler", std::to_string(result.total_euler));
            record.fields.emplace_back("branch_points", std::to_string(result.branch_points_used));
        } else if (step.op == "multiple_fibers") {
            FiberConfiguration config{parse_fiber_list(required(args, "config")), {}, ""};
            bool ok = multiple_fiber_consistency(
                static_cast<int>(parse_int(required(args, "a"), "a")),
                static_cast<int>(parse_int(required(args, "b"), "b")), config);
            record.fields.emplace_back("ok", bool_str(ok));
        } else if (step.op == "hurwitz") {
            int ram = static_cast<int>(parse_int(arg(args, "ramification", "-1"), "ramification"));
            int b = hurwitz_branch_count(
                static_cast<int>(parse_int(required(args, "degree"), "degree")),
                static_cast<int>(parse_int(arg(args, "base_genus", "0"), "base genus")),
                static_cast<int>(parse_int(arg(args, "cover_genus", "0"), "cover genus")), ram);
            record.fields.emplace_back("branch_points", std::to_string(b));
        } else if (step.op == "rank_check") {
            std::int64_t curves = parse_int(required(args, "curves"), "curves");
            std::int64_t extra = parse_int(arg(args, "extra", "2"), "extra");
            std::int64_t b2 = parse_int(required(args, "b2"), "b2");
            record.fields.emplace_back("required", std::to_string(curves + extra));
            record.fields.emplace_back("available", std::to_string(b2));
            record.fields.emplace_back("overrun", bool_str(curves + extra > b2));
        } else if (step.op == "p2_quotient") {
            std::string action_text = required(args, "action");
            MonomialAction action;
            if (action_text == "identity") {
                action = MonomialAction::identity();
            } else if (action_text == "cyclic") {
                action = MonomialAction::cyclic_permutation();
            } else if (action_text.rfind("diag:", 0) == 0) {
                auto parts = split(action_text.substr(5), ',');
                if (parts.size() != 3) throw ParseError("diagonal action needs three weights");
                action = MonomialAction::diagonal(static_cast<int>(parse_int(parts[0], "weight")),
                                                  static_cast<int>(parse_int(parts[1], "weight")),
                                                  static_cast<int>(parse_int(parts[2], "weight")));
            } else {
                throw ParseError("unknown action '" + action_text + "'");
            }
            SurfaceLedger ledger = p2_quotient_analysis(action);
            record.fields.emplace_back("fixed_points", std::to_string(ledger.singularities.size()));
            record.fields.emplace_back("types", render_singularities(ledger.singularities));
            emit_ledger(record, ledger);
        } else if (step.op == "note") {
            record.fields.emplace_back("text", required(args, "text"));
        } else if (step.op == "reference") {
            std::string table = required(args, "table");
            record.fields.emplace_back("name", table);
            record.fields.emplace_back("rows", reference_table(table));
        } else {
            throw ParseError("unknown operation '" + step.op + "'");
        }
    }
};

} // namespace detail

// All steps run in order; a failing expectation never halts later steps.
inline Report run_scenario(const Scenario& scenario) {
    return detail::ScenarioRunner().run(scenario);
}

inline Report run_scenario_text(const std::string& text) {
    return run_scenario(parse_scenario(text));
}

} // namespace qhpp
