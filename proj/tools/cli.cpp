#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "posmap/io.hpp"
#include "posmap/poly_text.hpp"
#include "posmap/sturm.hpp"
#include "quartic.hpp"

namespace posmap::cli {

namespace {

using io::ordered_json;

struct Options {
    std::string input;
    std::string report;
    std::string output;
    std::string format = "json";
    std::string polynomial_format = "text";
    std::string provider = "line-probe";
    std::uint64_t seed = 0;
    std::uint64_t samples = 10000;
    std::uint64_t pipeline = 1000;
    bool verify_witness = false;
    bool timings = false;
    std::vector<std::string> polys;
    std::size_t count = 500;
    long max_abs = 20;
    std::vector<std::string> triple;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Polynomial arguments are literal text, or "@path" to read a file.
std::string poly_argument(const std::string& arg) { return arg.starts_with("@") ? read_file(arg.substr(1)) : arg; }

void emit(const Options& opt, const std::string& text, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + opt.output + "'");
    f << text;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::unique_ptr<CandidateSetProvider> make_provider(const std::string& name) {
    if (name == "line-probe") return std::make_unique<LineProbeProvider>();
    if (name == "empty") return std::make_unique<EmptyProvider>();
    throw PreconditionError("unknown provider '" + name + "'");
}

int exit_for(Status s) {
    switch (s) {
        case Status::Nonnegative: return kPositive;
        case Status::NotNonnegative: return kNotPositive;
        case Status::Unknown: return kUnknown;
    }
    return kUnknown;
}

Budget budget_of(const Options& opt) { return {opt.samples, opt.pipeline, opt.seed}; }

std::string render_vector(const CVector& v) {
    std::string s = "[";
    for (Eigen::Index k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v(k).str();
    return s + "]";
}

/// Independent re-check of a report witness: parse the emitted vectors back
/// and recompute ⟨x⊗y|J(Φ)|x⊗y⟩ by the direct quadruple sum.
bool witness_checks_out(const Superoperator& phi, const io::json& report, std::string& why) {
    const io::json& w = report.at("witness");
    if (w.is_null()) {
        why = "report carries no witness";
        return false;
    }
    const CVector x = io::gaussians_from_json(w.at("x"), "witness.x");
    const CVector y = io::gaussians_from_json(w.at("y"), "witness.y");
    if (x.size() != static_cast<Eigen::Index>(phi.n()) || y.size() != static_cast<Eigen::Index>(phi.n())) {
        why = "witness vectors have the wrong length";
        return false;
    }
    const Rational claimed = Rational::parse(w.at("value").get<std::string>());
    const Rational actual = evaluate_bilinear_form(choi_matrix(phi), x, y);
    if (actual != claimed) {
        why = "recomputed value " + actual.str() + " differs from reported " + claimed.str();
        return false;
    }
    if (actual.sign() >= 0) {
        why = "recomputed value " + actual.str() + " is not negative";
        return false;
    }
    why = "witness value " + actual.str() + " verified";
    return true;
}

int cmd_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
    const Superoperator phi = io::superoperator_from_json(io::parse_json(read_file(opt.input)));
    const auto provider = make_provider(opt.provider);
    const auto start = std::chrono::steady_clock::now();
    const MapReport report = analyze_map(phi, provider.get(), budget_of(opt));
    const auto stop = std::chrono::steady_clock::now();

    io::RunInfo info{budget_of(opt), utc_timestamp(), std::nullopt};
    if (opt.timings) info.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    const ordered_json j = io::report_to_json(report, info);

    if (opt.format == "text") {
        std::ostringstream s;
        s << "n: " << report.n << "\n"
          << "hermiticity_preserving: " << (report.hermiticity_preserving ? "true" : "false") << "\n"
          << "completely_positive: " << (report.completely_positive ? "true" : "false") << "\n"
          << "status: " << to_string(report.verdict.status) << "\n"
          << "engine: " << report.verdict.trace.engine << "\n";
        if (report.witness_x)
            s << "witness x: " << render_vector(*report.witness_x) << "\n"
              << "witness y: " << render_vector(*report.witness_y) << "\n"
              << "value: " << report.bilinear_value->str() << "\n";
        emit(opt, s.str(), out);
    } else {
        emit(opt, j.dump(2) + "\n", out);
    }

    if (opt.verify_witness && report.verdict.witness) {
        std::string why;
        const bool ok = witness_checks_out(phi, io::parse_json(j.dump()), why);
        err << why << "\n";
        if (!ok) return kInternalError;
    }
    return exit_for(report.verdict.status);
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const Superoperator phi = io::superoperator_from_json(io::parse_json(read_file(opt.input)));
    const io::json report = io::parse_json(read_file(opt.report));
    std::string why;
    const bool ok = witness_checks_out(phi, report, why);
    out << why << "\n";
    return ok ? kPositive : kNotPositive;
}

int cmd_polynomial(const Options& opt, std::ostream& out) {
    const auto input = io::map_input_from_json(io::parse_json(read_file(opt.input)));
    std::size_t n = 0;
    MultiPoly poly;
    if (const auto* phi = std::get_if<Superoperator>(&input)) {
        n = phi->n();
        poly = positivity_polynomial_from_kraus(*phi).poly;
        if (!(poly == positivity_polynomial_from_choi(choi_matrix(*phi)).poly))
            throw InternalError("positivity polynomial constructions disagree");
    } else {
        const auto& t = std::get<HermitianOperator>(input);
        n = t.n();
        poly = positivity_polynomial_from_choi(t).poly;
    }
    const std::vector<std::string> names = positivity_variable_names(n);
    const std::string text = to_text(poly, names);
    if (opt.polynomial_format == "json") {
        ordered_json j;
        j["n"] = n;
        j["variables"] = names;
        j["polynomial"] = text;
        emit(opt, j.dump(2) + "\n", out);
    } else {
        emit(opt, text + "\n", out);
    }
    return kPositive;
}

int cmd_decide(const Options& opt, std::ostream& out) {
    const ParsedPoly parsed = parse_poly(poly_argument(opt.polys.at(0)));
    const auto provider = make_provider(opt.provider);
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = decide_nonneg(parsed.poly, provider.get(), budget_of(opt));
    const auto stop = std::chrono::steady_clock::now();
    io::RunInfo info{budget_of(opt), utc_timestamp(), std::nullopt};
    if (opt.timings) info.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    ordered_json j = io::verdict_to_json(v, parsed.names, info);
    j["polynomial"] = to_text(parsed.poly, parsed.names);
    if (opt.format == "text") {
        std::ostringstream s;
        s << "status: " << to_string(v.status) << "\nengine: " << v.trace.engine << "\n";
        if (v.witness) {
            s << "witness:";
            for (std::size_t k = 0; k < v.witness->size(); ++k)
                s << " " << parsed.names[k] << "=" << (*v.witness)[k].str();
            s << "\nvalue: " << v.value->str() << "\n";
        }
        emit(opt, s.str(), out);
    } else {
        emit(opt, j.dump(2) + "\n", out);
    }
    return exit_for(v.status);
}

int cmd_sturm(const std::string& query, const Options& opt, std::ostream& out) {
    std::vector<UniPoly> polys;
    for (const auto& p : opt.polys) polys.push_back(parse_unipoly(poly_argument(p)));
    SturmLog log;
    ordered_json j;
    j["query"] = query;
    ordered_json inputs;
    if (query == "count-roots") {
        inputs["f"] = polys.at(0).str();
        if (polys[0].is_zero()) throw PreconditionError("the zero polynomial has infinitely many roots");
        j["inputs"] = inputs;
        j["result"] = tarski_query(polys[0], UniPoly(1), &log);
    } else if (query == "tarski") {
        inputs["f"] = polys.at(0).str();
        inputs["g"] = polys.at(1).str();
        j["inputs"] = inputs;
        j["result"] = tarski_query(polys[0], polys[1], &log);
    } else if (query == "exists-pos") {
        inputs["p"] = polys.at(0).str();
        inputs["q"] = polys.at(1).str();
        j["inputs"] = inputs;
        j["result"] = exists_joint_positive(polys[0], polys[1], &log);
    } else {
        inputs["g"] = polys.at(0).str();
        j["inputs"] = inputs;
        j["result"] = polys[0].is_zero() ? true : univariate_nonneg(polys[0], &log);
    }
    j["sequence_lengths"] = log.sequence_lengths;
    emit(opt, j.dump(2) + "\n", out);
    return kPositive;
}

int cmd_quartic(const Options& opt, std::ostream& out) {
    std::vector<quartic::Quartic> cases;
    if (!opt.triple.empty()) {
        cases.push_back({Rational::parse(opt.triple.at(0)), Rational::parse(opt.triple.at(1)),
                         Rational::parse(opt.triple.at(2))});
    } else {
        cases = {{Rational(-2), Rational(0), Rational(1)},
                 {Rational(0), Rational(0), Rational(-1)},
                 {Rational(0), Rational(0), Rational(0)}};
        for (auto& c : quartic::random_quartics(opt.count, opt.seed, opt.max_abs)) cases.push_back(std::move(c));
    }
    ordered_json rows = ordered_json::array();
    std::size_t agree = 0;
    for (const auto& c : cases) {
        const bool by_criterion = quartic::criterion_nonneg(c);
        const bool by_sturm = quartic::sturm_nonneg(c);
        agree += by_criterion == by_sturm;
        rows.push_back({{"p", c.p.str()},
                        {"q", c.q.str()},
                        {"r", c.r.str()},
                        {"delta", quartic::delta(c).str()},
                        {"L", quartic::big_l(c).str()},
                        {"criterion", by_criterion},
                        {"sturm", by_sturm},
                        {"agree", by_criterion == by_sturm}});
    }
    ordered_json j;
    j["query"] = "quartic-check";
    j["seed"] = opt.seed;
    j["total"] = cases.size();
    j["agreements"] = agree;
    j["all_agree"] = agree == cases.size();
    if (opt.format == "text") {
        std::ostringstream s;
        s << "agreement " << agree << "/" << cases.size() << "\n";
        for (const auto& row : rows)
            if (!row["agree"].get<bool>())
                s << "disagree p=" << row["p"].get<std::string>() << " q=" << row["q"].get<std::string>()
                  << " r=" << row["r"].get<std::string>() << "\n";
        emit(opt, s.str(), out);
    } else {
        j["cases"] = std::move(rows);
        emit(opt, j.dump(2) + "\n", out);
    }
    return agree == cases.size() ? kPositive : kNotPositive;
}

void add_budget_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--seed", opt.seed, "Sampler seed");
    cmd->add_option("--samples", opt.samples, "Sample budget")->check(CLI::PositiveNumber);
    cmd->add_option("--pipeline-budget", opt.pipeline, "Pipeline index budget");
    cmd->add_option("--provider", opt.provider, "Candidate family: line-probe or empty")
        ->check(CLI::IsMember({"line-probe", "empty"}));
    cmd->add_flag("--timings", opt.timings, "Include elapsed time in the report");
}

void add_output_flags(CLI::App* cmd, Options& opt, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("-o,--output", opt.output, "Write to a file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact positivity analysis of hermiticity-preserving maps"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Decide positivity of a superoperator");
    analyze->add_option("input", opt.input, "Superoperator JSON")->required();
    add_budget_flags(analyze, opt);
    add_output_flags(analyze, opt, opt.format);
    analyze->add_flag("--verify-witness", opt.verify_witness, "Re-check the witness independently");

    auto* verify = app.add_subcommand("verify", "Re-check the witness of an analyze report");
    verify->add_option("input", opt.input, "Superoperator JSON")->required();
    verify->add_option("report", opt.report, "Report JSON")->required();

    auto* polynomial = app.add_subcommand("polynomial", "Print the positivity polynomial");
    polynomial->add_option("input", opt.input, "Superoperator or Choi JSON")->required();
    add_output_flags(polynomial, opt, opt.polynomial_format);

    auto* decide = app.add_subcommand("decide-nonneg", "Decide global nonnegativity of a form");
    decide->add_option("poly", opt.polys, "Polynomial text or @file")->required()->expected(1);
    add_budget_flags(decide, opt);
    add_output_flags(decide, opt, opt.format);

    auto* sturm = app.add_subcommand("sturm", "Univariate Sturm queries");
    sturm->require_subcommand(1);
    auto* count_roots = sturm->add_subcommand("count-roots", "Distinct real roots of f");
    count_roots->add_option("f", opt.polys)->required()->expected(1);
    auto* tarski = sturm->add_subcommand("tarski", "Tarski query N(f, g)");
    tarski->add_option("polys", opt.polys, "f g")->required()->expected(2);
    auto* exists_pos = sturm->add_subcommand("exists-pos", "Whether p > 0 and q > 0 somewhere");
    exists_pos->add_option("polys", opt.polys, "p q")->required()->expected(2);
    auto* nonneg = sturm->add_subcommand("nonneg", "Whether g >= 0 everywhere");
    nonneg->add_option("g", opt.polys)->required()->expected(1);
    for (auto* sub : {count_roots, tarski, exists_pos, nonneg}) sub->add_option("-o,--output", opt.output);

    auto* quartic_cmd = app.add_subcommand("quartic-check", "Compare the quartic criterion with Sturm");
    quartic_cmd->add_option("--count", opt.count, "Random triples");
    quartic_cmd->add_option("--seed", opt.seed, "Seed");
    quartic_cmd->add_option("--max", opt.max_abs, "Bound on numerators and denominators")
        ->check(CLI::PositiveNumber);
    quartic_cmd->add_option("--triple", opt.triple, "Explicit p q r")->expected(3);
    add_output_flags(quartic_cmd, opt, opt.format);

    std::vector<std::string> argv_store{"posmap"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsageError;
    }
    try {
        if (analyze->parsed()) return cmd_analyze(opt, out, err);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (polynomial->parsed()) return cmd_polynomial(opt, out);
        if (decide->parsed()) return cmd_decide(opt, out);
        if (quartic_cmd->parsed()) return cmd_quartic(opt, out);
        for (auto [sub, name] : {std::pair{count_roots, "count-roots"}, std::pair{tarski, "tarski"},
                                 std::pair{exists_pos, "exists-pos"}, std::pair{nonneg, "nonneg"}})
            if (sub->parsed()) return cmd_sturm(name, opt, out);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kUsageError;
}

}  // namespace posmap::cli
