#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcrel/classrel.hpp"
#include "qcrel/comp.hpp"
#include "qcrel/fourier.hpp"
#include "qcrel/qcalg.hpp"
#include "qcrel/verify.hpp"

namespace {

using nlohmann::json;
using namespace qcrel;

// exit codes: 0 success, 1 property failure, 2 parse error, 3 resource cap
struct CliError {
    int code;
    std::string message;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_order(const std::string& token) {
    if (token.size() < 2 || token[0] != 'Z')
        throw CliError{2, "bad groupoid spec token '" + token + "', expected Z<order>"};
    for (std::size_t i = 1; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw CliError{2, "bad groupoid spec token '" + token + "', expected Z<order>"};
    const long v = std::strtol(token.c_str() + 1, nullptr, 10);
    if (v < 1 || v > 64) throw CliError{2, "cyclic order out of range in '" + token + "'"};
    return static_cast<int>(v);
}

AbelianGroupoid parse_groupoid_spec(const std::string& spec) {
    std::vector<FiniteAbelianGroup> comps;
    for (const std::string& comp : split(spec, '+')) {
        std::vector<int> factors;
        for (const std::string& tok : split(comp, 'x')) factors.push_back(parse_order(tok));
        comps.push_back(FiniteAbelianGroup(factors));
    }
    return AbelianGroupoid(comps);
}

std::string print_groupoid_spec(const AbelianGroupoid& Z) {
    std::string out;
    for (int i = 0; i < Z.component_count(); ++i) {
        if (i) out += "+";
        const auto& factors = Z.component(i).group.factors;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j) out += "x";
            out += "Z" + std::to_string(factors[j]);
        }
    }
    return out;
}

Rel parse_relation_literal(const std::string& text, int dom, int cod) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        throw CliError{2, "relation literal must look like {(a,b),(c,d)}"};
    s = s.substr(1, s.size() - 2);
    std::vector<std::pair<int, int>> pairs;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ',') {
            ++i;
            continue;
        }
        if (s[i] != '(') throw CliError{2, "expected '(' in relation literal"};
        const std::size_t comma = s.find(',', i);
        const std::size_t close = s.find(')', i);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw CliError{2, "expected '(a,b)' in relation literal"};
        try {
            const int a = std::stoi(s.substr(i + 1, comma - i - 1));
            const int b = std::stoi(s.substr(comma + 1, close - comma - 1));
            if (a < 0 || a >= dom || b < 0 || b >= cod)
                throw CliError{2, "relation literal index out of range"};
            pairs.emplace_back(a, b);
        } catch (const CliError&) {
            throw;
        } catch (const std::exception&) {
            throw CliError{2, "bad integer in relation literal"};
        }
        i = close + 1;
    }
    return Rel::from_pairs(dom, cod, pairs);
}

int effective_cap(int flag_cap) {
    if (flag_cap > 0) return flag_cap;
    if (const char* env = std::getenv("QCREL_CAP")) {
        const std::string text = env;
        try {
            std::size_t used = 0;
            const int v = std::stoi(text, &used);
            if (used != text.size() || v < 1) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw CliError{2, "QCREL_CAP must be a positive integer, got '" + text + "'"};
        }
    }
    return 25;
}

std::string fmt6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string fmt_entry(const Complex& z, bool all_real) {
    if (all_real) return fmt6(z.real());
    const double im = z.imag();
    return fmt6(z.real()) + (im < 0 ? "-" : "+") + fmt6(im < 0 ? -im : im) + "i";
}

std::string fmt_err(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void emit(const json& report, const std::string& format, const std::string& table) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << table;
}

json base_report(const std::string& command, json inputs) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    return j;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

int run_enumerate(const std::string& dom_spec, const std::string& cod_spec,
                  const std::string& format, int cap_flag) {
    Timer timer;
    const AbelianGroupoid A = parse_groupoid_spec(dom_spec);
    const AbelianGroupoid B = parse_groupoid_spec(cod_spec);
    const int cap = effective_cap(cap_flag);
    const auto rels = enumerate_classical_relations(A, B, cap);
    std::string table;
    json results = json::array();
    for (const auto& f : rels) {
        const std::string line = to_string(f.rel);
        table += line + "\n";
        results.push_back(line);
    }
    json report = base_report("enumerate", {{"domain", print_groupoid_spec(A)},
                                            {"codomain", print_groupoid_spec(B)},
                                            {"cap", cap}});
    report["results"] = std::move(results);
    report["pass"] = true;
    report["timing_ms"] = timer.ms();
    emit(report, format, table);
    return 0;
}

// pair specs for the algorithm commands; canonical grids need uniform structures
ComplementaryPair pair_for(const AbelianGroupoid& Z) {
    try {
        return canonical_pair_for(Z);
    } catch (const std::exception& e) {
        throw CliError{2, std::string("cannot build measurement grid: ") + e.what()};
    }
}

ClassicalRelation classical_input(const Rel& f, const AbelianGroupoid& A,
                                  const AbelianGroupoid& B) {
    try {
        return make_classical(f, A, B);
    } catch (const std::invalid_argument& e) {
        throw CliError{2, std::string("relation is not classical: ") + e.what()};
    }
}

Rel select_relation(const AbelianGroupoid& A, const AbelianGroupoid& B,
                    const std::string& literal, int index, int cap_flag) {
    if (!literal.empty() && index >= 0)
        throw CliError{2, "give either --relation or --index, not both"};
    if (literal.empty() && index < 0) throw CliError{2, "need --relation or --index"};
    if (!literal.empty())
        return parse_relation_literal(literal, A.carrier_size(), B.carrier_size());
    const auto rels = enumerate_classical_relations(A, B, effective_cap(cap_flag));
    if (index >= static_cast<int>(rels.size()))
        throw CliError{2, "--index out of range, enumeration has " +
                              std::to_string(rels.size()) + " relations"};
    return rels[index].rel;
}

int run_dj(const std::string& dom_spec, const std::string& cod_spec, const std::string& literal,
           int index, const std::string& format, int cap_flag) {
    Timer timer;
    const AbelianGroupoid A = parse_groupoid_spec(dom_spec);
    const AbelianGroupoid B = parse_groupoid_spec(cod_spec);
    const ComplementaryPair pa = pair_for(A), pb = pair_for(B);
    const Rel f = select_relation(A, B, literal, index, cap_flag);
    const ClassicalRelation cf = classical_input(f, A, B);
    const AlgorithmOutcome out = dj_run(cf, pa, pb);
    const bool constant = is_constant_rel(f, A, B);
    const bool balanced = is_balanced_rel(f, pa, pb);
    const std::string cls = constant ? "CONSTANT" : balanced ? "BALANCED" : "NEITHER";
    const std::string scalar = out.scalar == Scalar::one ? "1" : "0";
    std::string table;
    table += "relation: " + to_string(f) + "\n";
    table += "output: " + to_string(out.output_state) + "\n";
    table += cls + ", scalar=" + scalar + "\n";
    json report = base_report("dj", {{"domain", print_groupoid_spec(A)},
                                     {"codomain", print_groupoid_spec(B)},
                                     {"relation", to_string(f)}});
    report["results"] = {{"classification", cls},
                         {"scalar", out.scalar == Scalar::one ? 1 : 0},
                         {"output", to_string(out.output_state)}};
    report["pass"] = constant != balanced;
    report["timing_ms"] = timer.ms();
    emit(report, format, table);
    return report["pass"].get<bool>() ? 0 : 1;
}

int run_grover(const std::string& dom_spec, const std::string& cod_spec,
               const std::string& literal, int index, int sigma, const std::string& format,
               int cap_flag) {
    Timer timer;
    const AbelianGroupoid S = parse_groupoid_spec(dom_spec);
    const AbelianGroupoid B = parse_groupoid_spec(cod_spec);
    const ComplementaryPair ps = pair_for(S), pb = pair_for(B);
    const int n_sigma = static_cast<int>(classical_states(pb.X).size());
    if (sigma < 0 || sigma >= n_sigma)
        throw CliError{2, "--sigma out of range, codomain has " + std::to_string(n_sigma) +
                              " classical states"};
    // the search relation may be non-classical, so take the literal as-is
    const Rel f = select_relation(S, B, literal, index, cap_flag);
    const AlgorithmOutcome out = grover_run(f, ps, pb, sigma);
    std::string table;
    table += "relation: " + to_string(f) + "\n";
    table += "possible outcomes: " + to_string(out.output_state) + "\n";
    json states = json::array();
    for (std::size_t r = 0; r < out.possible_classical_outcomes.size(); ++r) {
        const auto& [idx, possible] = out.possible_classical_outcomes[r];
        table += "state " + std::to_string(idx) + ": " +
                 (possible ? "possible" : "impossible") + ", zero-condition " +
                 (out.zero_condition[r] ? "holds" : "fails") + "\n";
        states.push_back(
            {{"state", idx}, {"possible", possible}, {"zero_condition", bool(out.zero_condition[r])}});
    }
    table += std::string("diffusion bijective: ") + (out.diffusion_bijective ? "yes" : "no") + "\n";
    table += std::string("zero-condition cross-check: ") +
             (out.implication_ok ? "consistent" : "violated") + "\n";
    json report = base_report("grover", {{"domain", print_groupoid_spec(S)},
                                         {"codomain", print_groupoid_spec(B)},
                                         {"relation", to_string(f)},
                                         {"sigma", sigma}});
    report["results"] = {{"possible_outcomes", to_string(out.output_state)},
                         {"states", std::move(states)},
                         {"diffusion_bijective", out.diffusion_bijective},
                         {"crosscheck_consistent", out.implication_ok}};
    // an empty outcome is the property failure; the cross-check is data about
    // the input's class and is reported, not gated on
    const bool pass = out.scalar == Scalar::one;
    report["pass"] = pass;
    report["timing_ms"] = timer.ms();
    emit(report, format, table);
    return pass ? 0 : 1;
}

int run_homid(const std::string& dom_spec, const std::string& cod_spec,
              const std::string& literal, int index, int rho, int sigma,
              const std::string& format, int cap_flag) {
    Timer timer;
    const AbelianGroupoid G = parse_groupoid_spec(dom_spec);
    const AbelianGroupoid A = parse_groupoid_spec(cod_spec);
    const ComplementaryPair pg = pair_for(G), pa = pair_for(A);
    const Rel f = select_relation(G, A, literal, index, cap_flag);
    const ClassicalRelation cf = classical_input(f, G, A);
    const int n_rho = static_cast<int>(classical_states(pg.X).size());
    const int n_sigma = static_cast<int>(classical_states(pa.X).size());
    if ((rho >= 0) != (sigma >= 0))
        throw CliError{2, "give --rho and --sigma together, or neither for a full sweep"};
    std::string table = "relation: " + to_string(f) + "\n";
    json report = base_report("homid", {{"domain", print_groupoid_spec(G)},
                                        {"codomain", print_groupoid_spec(A)},
                                        {"relation", to_string(f)}});
    bool pass = true;
    if (rho >= 0) {
        if (rho >= n_rho || sigma >= n_sigma) throw CliError{2, "--rho or --sigma out of range"};
        const AlgorithmOutcome out = grouphomid_run(cf, pg, pa, rho, sigma);
        pass = out.simplified_agrees;
        table += "scalar: " + std::string(out.scalar == Scalar::one ? "1" : "0") + "\n";
        table += "output: " + to_string(out.output_state) + "\n";
        report["inputs"]["rho"] = rho;
        report["inputs"]["sigma"] = sigma;
        report["results"] = {{"scalar", out.scalar == Scalar::one ? 1 : 0},
                             {"output", to_string(out.output_state)},
                             {"simplified_agrees", out.simplified_agrees}};
    } else {
        std::set<int> possible_rho;
        json sweeps = json::array();
        for (int s = 0; s < n_sigma; ++s) {
            std::vector<int> here;
            for (int r = 0; r < n_rho; ++r) {
                const AlgorithmOutcome out = grouphomid_run(cf, pg, pa, r, s);
                if (!out.simplified_agrees) pass = false;
                if (out.scalar == Scalar::one) {
                    here.push_back(r);
                    possible_rho.insert(r);
                }
            }
            std::string line = "sigma " + std::to_string(s) + ": possible rho {";
            for (std::size_t k = 0; k < here.size(); ++k)
                line += (k ? "," : "") + std::to_string(here[k]);
            table += line + "}\n";
            sweeps.push_back({{"sigma", s}, {"possible_rho", here}});
        }
        const bool all_states = static_cast<int>(possible_rho.size()) == n_rho;
        if (all_states) table += "all classical states possible\n";
        report["results"] = {{"per_sigma", std::move(sweeps)},
                             {"all_states_possible", all_states},
                             {"simplified_agrees", pass}};
    }
    report["pass"] = pass;
    report["timing_ms"] = timer.ms();
    emit(report, format, table);
    return pass ? 0 : 1;
}

FiniteAbelianGroup group_for_fourier(const std::string& spec) {
    const AbelianGroupoid Z = parse_groupoid_spec(spec);
    if (Z.component_count() != 1)
        throw CliError{2, "fourier needs a single-component group spec like Z4 or Z2xZ2"};
    return Z.component(0).group;
}

std::vector<Complex> parse_vector_literal(const std::string& text, int n) {
    std::vector<Complex> out;
    for (const std::string& tok : split(text, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(tok, &used);
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used])))
                ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.emplace_back(v, 0.0);
        } catch (const std::exception&) {
            throw CliError{2, "bad vector entry '" + tok + "'"};
        }
    }
    if (static_cast<int>(out.size()) != n)
        throw CliError{2, "vector literal needs " + std::to_string(n) + " entries"};
    return out;
}

int run_fourier(const std::string& spec, bool matrix, const std::string& transform,
                bool check_all, const std::string& format) {
    Timer timer;
    const FiniteAbelianGroup G = group_for_fourier(spec);
    const int n = G.order();
    const int modes = int(matrix) + int(!transform.empty()) + int(check_all);
    if (modes != 1) throw CliError{2, "pick exactly one of --matrix, --transform, --check-all"};
    json report = base_report("fourier", {{"group", print_groupoid_spec(parse_groupoid_spec(spec))}});
    std::string table;
    bool pass = true;
    if (matrix) {
        const ComplexMatrix F = fourier_matrix(G);
        bool all_real = true;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (std::abs(F.at(r, c).imag()) > 1e-12) all_real = false;
        json rows = json::array();
        for (int r = 0; r < n; ++r) {
            std::string line;
            json row = json::array();
            for (int c = 0; c < n; ++c) {
                const std::string e = fmt_entry(F.at(r, c), all_real);
                line += (c ? " " : "") + e;
                row.push_back(e);
            }
            table += line + "\n";
            rows.push_back(std::move(row));
        }
        report["inputs"]["mode"] = "matrix";
        report["results"] = {{"matrix", std::move(rows)}};
    } else if (!transform.empty()) {
        const GroupFunction f(G, parse_vector_literal(transform, n));
        const GroupFunction F = fourier_transform(f);
        bool all_real = true;
        for (const Complex& z : F.values)
            if (std::abs(z.imag()) > 1e-12) all_real = false;
        std::string line;
        json vec = json::array();
        for (int i = 0; i < n; ++i) {
            const std::string e = fmt_entry(F.values[i], all_real);
            line += (i ? " " : "") + e;
            vec.push_back(e);
        }
        table += line + "\n";
        report["inputs"]["mode"] = "transform";
        report["inputs"]["vector"] = transform;
        report["results"] = {{"transform", std::move(vec)}};
    } else {
        std::mt19937 rng(4242u);
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        const auto random_fn = [&] {
            std::vector<Complex> v(n);
            for (auto& x : v) x = Complex(coord(rng), coord(rng));
            return GroupFunction(G, std::move(v));
        };
        double inv_err = 0.0, conv_err = 0.0;
        for (int i = 0; i < 50; ++i) {
            const GroupFunction f = random_fn();
            inv_err = std::max(inv_err, max_abs_diff(inverse_fourier(fourier_transform(f)), f));
        }
        for (int i = 0; i < 20; ++i)
            conv_err = std::max(conv_err, convolution_theorem_error(random_fn(), random_fn()));
        const double orth_err = character_orthogonality_check(G);
        const double unit_err = fourier_matrix_unitarity_error(fourier_matrix(G));
        pass = inv_err < kTol && conv_err < kTol && orth_err < kTol && unit_err < kTol;
        table += "inversion max error: " + fmt_err(inv_err) + "\n";
        table += "convolution max error: " + fmt_err(conv_err) + "\n";
        table += "orthogonality max error: " + fmt_err(orth_err) + "\n";
        table += "unitarity max error: " + fmt_err(unit_err) + "\n";
        table += pass ? "all errors < 1e-9\n" : "errors exceed 1e-9\n";
        report["inputs"]["mode"] = "check-all";
        report["results"] = {{"inversion", inv_err},
                             {"convolution", conv_err},
                             {"orthogonality", orth_err},
                             {"unitarity", unit_err}};
    }
    report["pass"] = pass;
    report["timing_ms"] = timer.ms();
    emit(report, format, table);
    return pass ? 0 : 1;
}

int run_verify(const std::string& suite, bool inject_mutation, const std::string& format) {
    Timer timer;
    std::vector<SuiteResult> results;
    try {
        results = run_suites(suite, inject_mutation);
    } catch (const std::invalid_argument& e) {
        throw CliError{2, e.what()};
    }
    std::string table;
    json suites = json::array();
    bool pass = true;
    int total_passed = 0, total = 0;
    for (const auto& s : results) {
        json checks = json::array();
        for (const auto& c : s.checks) {
            table += std::string(c.passed ? "[PASS] " : "[FAIL] ") + s.name + ": " + c.name + "\n";
            checks.push_back({{"name", c.name}, {"pass", c.passed}});
        }
        char line[160];
        std::snprintf(line, sizeof line, "suite %s: %d/%d passed in %.1f ms\n", s.name.c_str(),
                      s.passed_count(), static_cast<int>(s.checks.size()), s.elapsed_ms);
        table += line;
        suites.push_back({{"suite", s.name},
                          {"checks", std::move(checks)},
                          {"passed", s.passed_count()},
                          {"total", static_cast<int>(s.checks.size())},
                          {"elapsed_ms", s.elapsed_ms}});
        total_passed += s.passed_count();
        total += static_cast<int>(s.checks.size());
        if (!s.all_passed()) pass = false;
    }
    table += "properties passed: " + std::to_string(total_passed) + "/" + std::to_string(total) +
             "\n";
    json report = base_report("verify", {{"suite", suite}});
    report["results"] = std::move(suites);
    report["pass"] = pass;
    report["timing_ms"] = timer.ms();
    emit(report, format, table);
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relational models of quantum algorithms over finite abelian groupoids"};
    app.require_subcommand(1);
    int rc = 0;

    std::string format = "table";
    std::string dom, cod, literal, vector_literal, suite = "all";
    int cap = -1, index = -1, sigma = 1, rho = -1, homid_sigma = -1;
    bool matrix = false, check_all = false, inject_mutation = false;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
    };
    const auto add_cap = [&](CLI::App* cmd) {
        cmd->add_option("--cap", cap, "search budget in relation bits (overrides QCREL_CAP)");
    };

    auto* cmd_enum = app.add_subcommand("enumerate", "list the classical relations between two groupoids");
    cmd_enum->add_option("domain", dom, "domain groupoid spec, e.g. Z2+Z2")->required();
    cmd_enum->add_option("codomain", cod, "codomain groupoid spec")->required();
    add_format(cmd_enum);
    add_cap(cmd_enum);
    cmd_enum->callback([&] { rc = run_enumerate(dom, cod, format, cap); });

    auto* cmd_dj = app.add_subcommand("dj", "constant-versus-balanced decision in one query");
    cmd_dj->add_option("domain", dom)->required();
    cmd_dj->add_option("codomain", cod)->required();
    cmd_dj->add_option("--relation", literal, "relation literal {(a,b),...}");
    cmd_dj->add_option("--index", index, "pick the nth enumerated relation");
    add_format(cmd_dj);
    add_cap(cmd_dj);
    cmd_dj->callback([&] { rc = run_dj(dom, cod, literal, index, format, cap); });

    auto* cmd_grover = app.add_subcommand("grover", "single-query search for states off the target");
    cmd_grover->add_option("domain", dom)->required();
    cmd_grover->add_option("codomain", cod)->required();
    cmd_grover->add_option("--relation", literal, "search relation literal, possibly non-classical");
    cmd_grover->add_option("--index", index, "pick the nth enumerated relation");
    cmd_grover->add_option("--sigma", sigma, "target classical state index")->capture_default_str();
    add_format(cmd_grover);
    add_cap(cmd_grover);
    cmd_grover->callback([&] { rc = run_grover(dom, cod, literal, index, sigma, format, cap); });

    auto* cmd_homid = app.add_subcommand("homid", "identify which states a relation makes possible");
    cmd_homid->add_option("domain", dom)->required();
    cmd_homid->add_option("codomain", cod)->required();
    cmd_homid->add_option("--relation", literal, "relation literal {(a,b),...}");
    cmd_homid->add_option("--index", index, "pick the nth enumerated relation");
    cmd_homid->add_option("--rho", rho, "measured classical state index");
    cmd_homid->add_option("--sigma", homid_sigma, "prepared classical state index");
    add_format(cmd_homid);
    add_cap(cmd_homid);
    cmd_homid->callback(
        [&] { rc = run_homid(dom, cod, literal, index, rho, homid_sigma, format, cap); });

    auto* cmd_fourier = app.add_subcommand("fourier", "character transform tools for one group");
    cmd_fourier->add_option("group", dom, "group spec, e.g. Z4 or Z2xZ2")->required();
    cmd_fourier->add_flag("--matrix", matrix, "print the character matrix");
    cmd_fourier->add_option("--transform", vector_literal, "transform a comma-separated vector");
    cmd_fourier->add_flag("--check-all", check_all, "run the numeric invariants");
    add_format(cmd_fourier);
    cmd_fourier->callback([&] { rc = run_fourier(dom, matrix, vector_literal, check_all, format); });

    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites");
    cmd_verify->add_option("--suite", suite, "rel, groupoid, comp, classrel, qcalg, fourier, or all")
        ->capture_default_str();
    cmd_verify->add_flag("--inject-mutation", inject_mutation)->group("");
    add_format(cmd_verify);
    cmd_verify->callback([&] { rc = run_verify(suite, inject_mutation, format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
