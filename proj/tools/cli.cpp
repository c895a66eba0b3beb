#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "lebx/bounds.hpp"
#include "lebx/decomposition.hpp"
#include "lebx/errors.hpp"
#include "lebx/maximizer.hpp"
#include "lebx/parallel.hpp"
#include "lebx/simplex.hpp"
#include "lebx/suites.hpp"

namespace lebx::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> n;
    std::string n_range;
    std::optional<int> d;
    std::string point;
    double grid_step = 0.0;
    int refine = 30;
    int top_cells = 16;
    std::string mode = "full-domain";
    bool no_symmetry = false;
    std::string suite;
    int trials = 1000;
    std::uint64_t seed = 42;
    std::optional<double> tol;
    std::string out;
    std::string format;
    std::int64_t budget = MaxConfig{}.max_evaluations;
    bool no_lambda = false;
    bool terms = false;
};

enum class Format { table, csv, json };

Format parse_format(const std::string& s, Format fallback) {
    if (s.empty()) return fallback;
    if (s == "table") return Format::table;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw UsageError("--format must be table, csv or json");
}

// Round-trippable decimal form of a double.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string join(std::span<const double> v, const char* sep, std::string (*f)(double) = num) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + f(v[k]);
    return s;
}

std::vector<double> to_vector(std::span<const double> v) { return {v.begin(), v.end()}; }

std::vector<int> degrees(const Options& o) {
    if (!o.n_range.empty()) {
        const auto colon = o.n_range.find(':');
        if (colon == std::string::npos) throw UsageError("--n-range must look like a:b");
        int a = 0, b = 0;
        try {
            std::size_t used = 0;
            a = std::stoi(o.n_range.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("a");
            const std::string rest = o.n_range.substr(colon + 1);
            b = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("b");
        } catch (const std::logic_error&) {
            throw UsageError("--n-range must look like a:b with integers a and b");
        }
        if (a < 1 || a > b) throw UsageError("--n-range a:b needs 1 <= a <= b");
        std::vector<int> ns;
        for (int n = a; n <= b; ++n) ns.push_back(n);
        return ns;
    }
    if (o.n) {
        if (*o.n < 1) throw UsageError("--n must be >= 1");
        return {*o.n};
    }
    throw UsageError("give --n or --n-range");
}

std::vector<double> parse_point(const std::string& text) {
    std::vector<double> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end != item.c_str() + item.size()) throw UsageError("malformed --point entry '" + item + "'");
        c.push_back(v);
    }
    if (c.size() < 2) throw UsageError("--point needs at least two comma-separated coordinates");
    return c;
}

MaxConfig max_config(const Options& o) {
    MaxConfig cfg;
    cfg.grid_step = o.grid_step;
    cfg.refine_rounds = o.refine;
    cfg.top_cells = o.top_cells;
    try {
        cfg.mode = parse_mode(o.mode);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    cfg.use_symmetry = !o.no_symmetry;
    cfg.max_evaluations = o.budget;
    return cfg;
}

Json config_json(const MaxConfig& cfg) {
    return Json{{"grid_step", cfg.grid_step},
                {"refine_rounds", cfg.refine_rounds},
                {"top_cells", cfg.top_cells},
                {"mode", std::string(mode_name(cfg.mode))},
                {"use_symmetry", cfg.use_symmetry},
                {"max_evaluations", cfg.max_evaluations}};
}

std::string cmd_eval(const Options& o, Format f) {
    if (!o.n) throw UsageError("eval needs --n");
    if (*o.n < 1) throw UsageError("--n must be >= 1");
    if (o.point.empty()) throw UsageError("eval needs --point");
    const int n = *o.n;
    const std::vector<double> coords = parse_point(o.point);
    if (o.d && static_cast<std::size_t>(*o.d) + 1 != coords.size())
        throw UsageError("--point has " + std::to_string(coords.size()) + " coordinates but --d " + std::to_string(*o.d) +
                         " needs " + std::to_string(*o.d + 1));
    const Barycentric lam(coords);
    const int d = lam.dimension();
    const double value = lebesgue_function(lam, n);

    // Partition sums at the fundamental-domain representative; the value is symmetric.
    std::optional<PartitionSums> sums;
    std::optional<NodeOffset> offset;
    if (d == 2) {
        std::vector<double> sorted = to_vector(lam.coords());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        offset = offsets_of(Barycentric(sorted), n);
        sums = partition_sums(*offset);
    }
    std::optional<NodeSet> nodes;
    std::vector<double> terms;
    if (o.terms) {
        nodes = enumerate_multi_indices(n, d);
        terms = lebesgue_terms(lam, n);
    }

    std::ostringstream os;
    if (f == Format::json) {
        Json j{{"n", n}, {"d", d}, {"lambda", to_vector(lam.coords())}, {"L_value", value}};
        if (sums) {
            j["partition_sums"] = Json{{"r", offset->r},
                                       {"alpha", offset->alpha},
                                       {"S", sums->s},
                                       {"S2_parts", sums->s2_parts},
                                       {"total", sums->total()}};
        }
        if (nodes) {
            Json arr = Json::array();
            for (std::size_t k = 0; k < terms.size(); ++k)
                arr.push_back(Json{{"index", nodes->indices[k].entries()}, {"value", terms[k]}});
            j["terms"] = arr;
        }
        os << j.dump(2) << "\n";
    } else if (f == Format::csv) {
        os << "n,d,lambda,L_value,S1,S2,S3,S4,S5,S6\n";
        os << n << "," << d << ",\"" << join(lam.coords(), ",") << "\"," << num(value);
        for (int k = 0; k < 6; ++k) os << "," << (sums ? num(sums->s[k]) : "");
        os << "\n";
    } else {
        os << "n        " << n << "\n";
        os << "d        " << d << "\n";
        os << "lambda   " << join(lam.coords(), ", ", short_num) << "\n";
        os << "L        " << num(value) << "\n";
        if (sums) {
            os << "offset   r = (" << offset->r[0] << ", " << offset->r[1] << ", " << offset->r[2]
               << "), alpha = (" << join(offset->alpha, ", ", short_num) << ")\n";
            for (int k = 0; k < 6; ++k) os << "S" << k + 1 << "       " << num(sums->s[k]) << "\n";
            os << "sum S_k  " << num(sums->total()) << "\n";
        }
        if (nodes) {
            os << "terms\n";
            for (std::size_t k = 0; k < terms.size(); ++k) {
                std::string idx;
                for (int e : nodes->indices[k].entries()) idx += (idx.empty() ? "" : ",") + std::to_string(e);
                os << "  (" << idx << ")  " << num(terms[k]) << "\n";
            }
        }
    }
    return os.str();
}

std::string cmd_max(const Options& o, Format f) {
    const int d = o.d.value_or(2);
    if (d < 1) throw UsageError("--d must be >= 1");
    const MaxConfig cfg = max_config(o);
    std::ostringstream os;
    Json rows = Json::array();
    if (f == Format::csv) os << "n,d,lambda_est,argmax,evaluations,converged_step\n";
    if (f == Format::table) os << "   n  d  lambda_est               evaluations  argmax\n";
    for (int n : degrees(o)) {
        const MaximizationResult r = maximize_lebesgue(n, d, cfg);
        if (f == Format::json) {
            rows.push_back(Json{{"n", n},
                                {"d", d},
                                {"lambda_est", r.lambda_est},
                                {"argmax", to_vector(r.argmax.coords())},
                                {"evaluations", r.evaluations},
                                {"converged_step", r.converged_step},
                                {"config", config_json(cfg)}});
        } else if (f == Format::csv) {
            os << n << "," << d << "," << num(r.lambda_est) << ",\"" << join(r.argmax.coords(), ",") << "\","
               << r.evaluations << "," << num(r.converged_step) << "\n";
        } else {
            char line[96];
            std::snprintf(line, sizeof line, "%4d %2d  %-23.17g  %11lld  ", n, d, r.lambda_est,
                          static_cast<long long>(r.evaluations));
            os << line << join(r.argmax.coords(), ", ", short_num) << "\n";
        }
    }
    if (f == Format::json) os << rows.dump(2) << "\n";
    return os.str();
}

std::string cmd_bounds(const Options& o, Format f) {
    const int d = o.d.value_or(2);
    if (d < 1) throw UsageError("--d must be >= 1");
    const MaxConfig cfg = max_config(o);
    std::ostringstream os;
    Json rows = Json::array();
    if (f == Format::csv)
        os << "n,d,lambda_est,argmax,theorem2_bound,mu_cap,bos_bound,turetskii,ratio_theorem2,ratio_bos\n";
    if (f == Format::table)
        os << "   n  d  lambda_est        theorem2_bound    mu_cap            bos_bound         turetskii\n";
    for (int n : degrees(o)) {
        std::optional<MaximizationResult> m;
        if (!o.no_lambda) m = maximize_lebesgue(n, d, cfg);
        const BoundReport b = make_bound_report(n, d, m ? std::optional(m->lambda_est) : std::nullopt);
        const auto ratio = [&](const char* key) -> std::optional<double> {
            const auto it = b.ratios.find(key);
            return it == b.ratios.end() ? std::nullopt : std::optional(it->second);
        };
        const auto opt = [](std::optional<double> v) { return v ? num(*v) : std::string(); };
        const std::optional<double> th2 = n >= 4 ? std::optional(b.theorem2) : std::nullopt;
        const std::optional<double> mu = n >= 4 ? std::optional(b.mu_cap) : std::nullopt;
        const std::optional<double> tur = n >= 2 ? std::optional(b.turetskii) : std::nullopt;
        if (f == Format::json) {
            Json row{{"n", n},
                     {"d", d},
                     {"lambda_est", m ? Json(m->lambda_est) : Json(nullptr)},
                     {"argmax", m ? Json(to_vector(m->argmax.coords())) : Json(nullptr)},
                     {"theorem2_bound", th2 ? Json(*th2) : Json(nullptr)},
                     {"mu_cap", mu ? Json(*mu) : Json(nullptr)},
                     {"bos_bound", b.bos},
                     {"turetskii", tur ? Json(*tur) : Json(nullptr)},
                     {"ratio_theorem2", ratio("theorem2") ? Json(*ratio("theorem2")) : Json(nullptr)},
                     {"ratio_bos", ratio("bos") ? Json(*ratio("bos")) : Json(nullptr)}};
            if (m)
                row["maximization"] = Json{{"evaluations", m->evaluations},
                                           {"converged_step", m->converged_step},
                                           {"config", config_json(cfg)}};
            rows.push_back(row);
        } else if (f == Format::csv) {
            os << n << "," << d << "," << (m ? num(m->lambda_est) : "") << ","
               << (m ? "\"" + join(m->argmax.coords(), ",") + "\"" : "") << "," << opt(th2) << "," << opt(mu) << ","
               << num(b.bos) << "," << opt(tur) << "," << opt(ratio("theorem2")) << "," << opt(ratio("bos")) << "\n";
        } else {
            const auto cell = [](std::optional<double> v) {
                char buf[32];
                if (v)
                    std::snprintf(buf, sizeof buf, "%-16.10g  ", *v);
                else
                    std::snprintf(buf, sizeof buf, "%-16s  ", "-");
                return std::string(buf);
            };
            char head[32];
            std::snprintf(head, sizeof head, "%4d %2d  ", n, d);
            os << head << cell(m ? std::optional(m->lambda_est) : std::nullopt) << cell(th2) << cell(mu)
               << cell(b.bos) << cell(tur) << "\n";
        }
    }
    if (f == Format::json) os << rows.dump(2) << "\n";
    return os.str();
}

std::string cmd_verify(const Options& o, Format f, bool& passed) {
    if (o.suite.empty()) throw UsageError("verify needs --suite");
    SuiteOptions so;
    so.trials = o.trials;
    so.seed = o.seed;
    so.tol = o.tol;
    if (o.trials < 1) throw UsageError("--trials must be >= 1");
    if (o.n || !o.n_range.empty()) {
        const auto ns = degrees(o);
        so.n_lo = ns.front();
        so.n_hi = ns.back();
    }
    std::vector<SuiteReport> reports;
    try {
        reports = run_suite(o.suite, so);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    passed = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });

    std::ostringstream os;
    if (f == Format::json) {
        Json j{{"seed", o.seed}, {"trials", o.trials}, {"passed", passed}, {"suites", Json::array()}};
        for (const auto& r : reports) {
            Json s{{"suite", r.suite}, {"passed", r.passed()}, {"groups", Json::array()}};
            for (const auto& g : r.groups)
                s["groups"].push_back(Json{{"name", g.name},
                                           {"cases", g.cases},
                                           {"failures", g.failures},
                                           {"metric", g.metric},
                                           {"worst", g.worst},
                                           {"failed", g.failed}});
            j["suites"].push_back(s);
        }
        os << j.dump(2) << "\n";
    } else if (f == Format::csv) {
        os << "suite,group,cases,failures,metric,worst\n";
        for (const auto& r : reports)
            for (const auto& g : r.groups)
                os << r.suite << "," << g.name << "," << g.cases << "," << g.failures << "," << g.metric << ","
                   << num(g.worst) << "\n";
    } else {
        for (const auto& r : reports) {
            os << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases() << " cases, "
               << r.failures() << " failed)\n";
            for (const auto& g : r.groups) {
                char line[160];
                std::snprintf(line, sizeof line, "  %-20s cases %7lld  failed %5lld", g.name.c_str(),
                              static_cast<long long>(g.cases), static_cast<long long>(g.failures));
                os << line;
                if (!g.metric.empty()) os << "  worst " << g.metric << " " << short_num(g.worst);
                os << "\n";
                for (const auto& p : g.failed) os << "    failed: " << p << "\n";
            }
        }
    }
    return os.str();
}

void apply_thread_env() {
    const char* env = std::getenv("LEBX_THREADS");
    if (!env || !*env) return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw UsageError("LEBX_THREADS must be a nonnegative integer");
    set_thread_count(static_cast<int>(v));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << text;
        f.flush();
        if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
    }
    std::filesystem::rename(tmp, target);
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format: table, csv or json");
    sub->add_option("--out", o.out, "Write the result to this file (atomically)");
}

void add_search(CLI::App* sub, Options& o) {
    sub->add_option("--grid-step", o.grid_step, "Initial grid spacing; default 1/(4n)");
    sub->add_option("--refine", o.refine, "Refinement rounds");
    sub->add_option("--top-cells", o.top_cells, "Cells carried into each refinement round");
    sub->add_option("--mode", o.mode, "full-domain, vertex-region or edge-only");
    sub->add_flag("--no-symmetry", o.no_symmetry, "Search the whole simplex instead of the fundamental domain");
    sub->add_option("--budget", o.budget, "Maximum Lebesgue function evaluations per maximization");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Lebesgue functions and constants of equispaced interpolation on the simplex", "lebx"};
    app.require_subcommand(1, 1);

    auto* eval = app.add_subcommand("eval", "Evaluate the Lebesgue function at a point");
    eval->add_option("--n", o.n, "Degree")->required();
    eval->add_option("--d", o.d, "Dimension (defaults to the point's)");
    eval->add_option("--point", o.point, "Barycentric coordinates c1,c2[,c3,...]")->required();
    eval->add_flag("--terms", o.terms, "List |l_i| for every node");
    add_common(eval, o);

    auto* max = app.add_subcommand("max", "Estimate the Lebesgue constant");
    max->add_option("--n", o.n, "Degree");
    max->add_option("--n-range", o.n_range, "Inclusive degree range a:b");
    max->add_option("--d", o.d, "Dimension (default 2)");
    add_search(max, o);
    add_common(max, o);

    auto* bounds = app.add_subcommand("bounds", "Tabulate upper bounds next to the estimated constant");
    bounds->add_option("--n", o.n, "Degree");
    bounds->add_option("--n-range", o.n_range, "Inclusive degree range a:b");
    bounds->add_option("--d", o.d, "Dimension (default 2)");
    bounds->add_flag("--no-lambda", o.no_lambda, "Skip the maximization; bound columns only");
    add_search(bounds, o);
    add_common(bounds, o);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "identities, inequalities, partition, reduction or all")->required();
    verify->add_option("--trials", o.trials, "Random draws per case family (per degree for partition/reduction)");
    verify->add_option("--seed", o.seed, "Seed of the random draws");
    verify->add_option("--tol", o.tol, "Tolerance override");
    verify->add_option("--n", o.n, "Single degree for partition/reduction");
    verify->add_option("--n-range", o.n_range, "Degree range a:b for partition/reduction");
    add_common(verify, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "lebx: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        apply_thread_env();
        bool passed = true;
        std::string text;
        if (*eval) {
            text = cmd_eval(o, parse_format(o.format, Format::table));
        } else if (*max) {
            text = cmd_max(o, parse_format(o.format, Format::table));
        } else if (*bounds) {
            text = cmd_bounds(o, parse_format(o.format, Format::csv));
        } else {
            text = cmd_verify(o, parse_format(o.format, Format::table), passed);
        }
        emit(text, o.out, out);
        return passed ? kOk : kVerifyFailed;
    } catch (const UsageError& e) {
        err << "lebx: " << e.what() << "\n";
        return kBadInput;
    } catch (const BarycentricError& e) {
        err << "lebx: " << e.what() << "\n";
        return kInvariantViolation;
    } catch (const ResourceError& e) {
        err << "lebx: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        err << "lebx: " << e.what() << "\n";
        return kBadInput;
    }
}

}  // namespace lebx::cli
