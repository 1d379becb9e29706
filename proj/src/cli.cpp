#include "korobov/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "korobov/approximator.hpp"
#include "korobov/complexity.hpp"
#include "korobov/errors.hpp"
#include "korobov/params.hpp"
#include "korobov/spectrum.hpp"
#include "korobov/tractability.hpp"
#include "korobov/zeta.hpp"

namespace korobov::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt17(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.17g", x);
    return buf;
}

// JSON has no infinity; non-finite values become strings.
Json jnum(double x) {
    if (std::isfinite(x)) return x;
    return fmt17(x);
}

std::string join_doubles(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt17(v[i]);
    return s;
}

template <class T>
std::string join_ints(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

/// Serialized run configuration, echoed in every output header.
struct RunConfig {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(std::string key, std::string value) {
        entries.emplace_back(std::move(key), std::move(value));
    }
    Json to_json() const {
        Json j = Json::object();
        for (const auto& [k, v] : entries) j[k] = v;
        return j;
    }
    void write_csv_header(std::ostream& os) const {
        for (const auto& [k, v] : entries) os << "# " << k << '=' << v << '\n';
    }
};

struct Shared {
    std::string gamma = "const:1";
    std::string alpha = "const:1";
    std::string config;
    std::string format;
    std::string out;
    unsigned threads = 1;
    std::uint64_t node_budget = CountOptions{}.node_budget;
    std::size_t frontier_cap = SpectrumOptions{}.frontier_cap;
    CLI::Option* gamma_opt = nullptr;
    CLI::Option* alpha_opt = nullptr;
};

void add_shared(CLI::App* app, Shared& s, const char* default_format) {
    s.gamma_opt = app->add_option("--gamma", s.gamma,
                                  "weights: const:c | poly:a | geom:q | list:g1,g2,...");
    s.alpha_opt = app->add_option("--alpha", s.alpha,
                                  "smoothness: const:a | logaffine:a,b | list:a1,a2,...");
    app->add_option("--config", s.config, "key=value file with gamma= and alpha= lines");
    s.format = default_format;
    app->add_option("--format", s.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app->add_option("--out", s.out, "write output to this path instead of stdout");
    app->add_option("--threads", s.threads, "worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app->add_option("--node-budget", s.node_budget, "lattice-count node budget")
        ->capture_default_str();
    app->add_option("--frontier-cap", s.frontier_cap, "spectrum frontier cap")
        ->capture_default_str();
}

KorobovParams load_params(const Shared& s) {
    WeightSpec w = parse_weight_spec("const:1");
    SmoothnessSpec a = parse_smoothness_spec("const:1");
    if (!s.config.empty()) {
        std::ifstream in(s.config);
        if (!in) throw RangeViolation("cannot open config file '" + s.config + "'");
        KorobovParams from_file = load_params_config(in);
        w = from_file.weights();
        a = from_file.smoothness();
    }
    if (s.config.empty() || s.gamma_opt->count() > 0) w = parse_weight_spec(s.gamma);
    if (s.config.empty() || s.alpha_opt->count() > 0) a = parse_smoothness_spec(s.alpha);
    return KorobovParams(std::move(w), std::move(a));
}

RunConfig base_config(const std::string& command, const KorobovParams& params, const Shared& s) {
    RunConfig c;
    c.add("command", command);
    c.add("gamma", to_string(params.weights()));
    c.add("alpha", to_string(params.smoothness()));
    c.add("format", s.format);
    c.add("threads", std::to_string(s.threads));
    c.add("node_budget", std::to_string(s.node_budget));
    c.add("frontier_cap", std::to_string(s.frontier_cap));
    return c;
}

CountOptions count_options(const Shared& s) { return {s.node_budget, s.threads}; }
SpectrumOptions spectrum_options(const Shared& s) { return {s.frontier_cap}; }

// --- subcommands -----------------------------------------------------------

struct SpectrumArgs {
    std::size_t d = 1;
    std::size_t n = 10;
};

std::string cmd_spectrum(const Shared& s, const SpectrumArgs& a) {
    const auto params = load_params(s);
    auto cfg = base_config("spectrum", params, s);
    cfg.add("d", std::to_string(a.d));
    cfg.add("n", std::to_string(a.n));
    const auto top = enumerate_top(params, a.d, a.n, spectrum_options(s));

    std::ostringstream os;
    if (s.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < top.size(); ++i)
            rows.push_back({{"rank", i + 1},
                            {"k", top[i].index},
                            {"lambda", top[i].value},
                            {"sqrt_lambda", std::sqrt(top[i].value)}});
        os << Json{{"config", cfg.to_json()}, {"rows", rows}}.dump(2) << '\n';
    } else {
        cfg.write_csv_header(os);
        os << "rank";
        for (std::size_t j = 1; j <= a.d; ++j) os << ",k" << j;
        os << ",lambda,sqrt_lambda\n";
        for (std::size_t i = 0; i < top.size(); ++i) {
            os << i + 1;
            for (auto k : top[i].index) os << ',' << k;
            os << ',' << fmt17(top[i].value) << ',' << fmt17(std::sqrt(top[i].value)) << '\n';
        }
    }
    return os.str();
}

struct ComplexityArgs {
    std::size_t d = 1;
    double eps = 0.5;
    std::vector<double> eps_grid;
    std::vector<std::size_t> d_grid;
    double tau = 0.0;
    CLI::Option* tau_opt = nullptr;
    CLI::Option* format_opt = nullptr;
};

std::string cmd_complexity(Shared s, const ComplexityArgs& a) {
    const auto params = load_params(s);
    const bool batch = !a.eps_grid.empty() || !a.d_grid.empty();
    if (a.format_opt->count() == 0) s.format = batch ? "csv" : "json";
    const bool with_tau = a.tau_opt->count() > 0;

    const std::vector<double> eps_list = a.eps_grid.empty() ? std::vector<double>{a.eps} : a.eps_grid;
    const std::vector<std::size_t> d_list =
        a.d_grid.empty() ? std::vector<std::size_t>{a.d} : a.d_grid;

    auto cfg = base_config("complexity", params, s);
    cfg.add("d", join_ints(d_list));
    cfg.add("eps", join_doubles(eps_list));
    cfg.add("tau", with_tau ? fmt17(a.tau) : "none");

    std::vector<ComplexityResult> results;
    for (double eps : eps_list)
        for (std::size_t d : d_list) {
            ComplexityQuery q{params, d, eps};
            auto r = info_complexity(q, count_options(s));
            if (with_tau) r.upper_bound = info_complexity_upper_bound(q, a.tau);
            results.push_back(r);
        }

    std::ostringstream os;
    if (s.format == "json") {
        Json rows = Json::array();
        for (const auto& r : results) {
            Json row{{"d", r.d},
                     {"epsilon", r.epsilon},
                     {"count", r.count},
                     {"nodes_visited", r.nodes_visited}};
            row["upper_bound"] = r.upper_bound ? jnum(*r.upper_bound) : Json();
            rows.push_back(row);
        }
        Json doc{{"config", cfg.to_json()}};
        if (batch)
            doc["rows"] = rows;
        else
            for (auto& [k, v] : rows[0].items()) doc[k] = v;
        os << doc.dump(2) << '\n';
    } else {
        cfg.write_csv_header(os);
        os << "d,epsilon,count,upper_bound,nodes_visited\n";
        for (const auto& r : results)
            os << r.d << ',' << fmt17(r.epsilon) << ',' << r.count << ','
               << (r.upper_bound ? fmt17(*r.upper_bound) : "") << ',' << r.nodes_visited << '\n';
    }
    return os.str();
}

std::string cmd_classify(const Shared& s) {
    const auto params = load_params(s);
    auto cfg = base_config("classify", params, s);
    const auto r = classify(params);
    Json delta{{"value", jnum(r.delta.value)}, {"exact", r.delta.exact}};
    if (r.delta.window)
        delta["window"] = {r.delta.window->first, r.delta.window->second};
    Json doc{{"config", cfg.to_json()},
             {"delta", delta},
             {"alpha1", r.alpha1},
             {"spt", to_string(r.spt)},
             {"pt", to_string(r.pt)},
             {"p_str", r.p_str ? jnum(*r.p_str) : Json()},
             {"curse", to_string(r.curse)},
             {"wt_t1_gt_1", to_string(r.wt_t1_gt_1)},
             {"notes", r.notes}};
    return doc.dump(2) + "\n";
}

struct FitArgs {
    std::size_t d = 1;
    std::vector<double> eps_grid;
};

std::string cmd_fit(const Shared& s, const FitArgs& a) {
    const auto params = load_params(s);
    auto cfg = base_config("fit", params, s);
    cfg.add("d", std::to_string(a.d));
    cfg.add("eps_grid", join_doubles(a.eps_grid));
    const auto fit = fit_exponent(params, a.d, a.eps_grid, count_options(s));
    Json points = Json::array();
    for (std::size_t i = 0; i < fit.counts.size(); ++i)
        points.push_back({{"epsilon", fit.epsilons[i]}, {"count", fit.counts[i]}});
    const auto report = classify(params);
    Json doc{{"config", cfg.to_json()},
             {"d", fit.d},
             {"slope", fit.slope},
             {"intercept", fit.intercept},
             {"residual", fit.residual},
             {"p_str", report.p_str ? jnum(*report.p_str) : Json()},
             {"points", points}};
    return doc.dump(2) + "\n";
}

struct CurseArgs {
    std::vector<std::size_t> d_grid;
    double eps = 0.5;
};

std::string cmd_curse(const Shared& s, const CurseArgs& a) {
    const auto params = load_params(s);
    auto cfg = base_config("curse", params, s);
    cfg.add("d_grid", join_ints(a.d_grid));
    cfg.add("eps", fmt17(a.eps));
    std::vector<std::pair<std::size_t, CurseWitness>> rows;
    std::vector<std::uint64_t> counts;
    for (auto d : a.d_grid) {
        rows.emplace_back(d, curse_witness(params, a.eps, d, false));
        counts.push_back(info_complexity({params, d, a.eps}, count_options(s)).count);
    }
    std::ostringstream os;
    if (s.format == "json") {
        Json out = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
            out.push_back({{"d", rows[i].first},
                           {"three_pow_d", rows[i].second.holds ? Json(rows[i].second.lower_bound) : Json()},
                           {"witness_applies", rows[i].second.holds},
                           {"count", counts[i]}});
        os << Json{{"config", cfg.to_json()}, {"rows", out}}.dump(2) << '\n';
    } else {
        cfg.write_csv_header(os);
        os << "d,three_pow_d,witness_applies,count\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& w = rows[i].second;
            os << rows[i].first << ',' << (w.holds ? std::to_string(w.lower_bound) : "") << ','
               << (w.holds ? "true" : "false") << ',' << counts[i] << '\n';
        }
    }
    return os.str();
}

Frequency parse_key(const std::string& key, std::size_t d) {
    Frequency k;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            k.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw RangeViolation("bad frequency key '" + key + "'");
        }
    }
    if (k.size() != d)
        throw DimensionMismatch("frequency key '" + key + "' does not have d = " +
                                std::to_string(d) + " entries");
    return k;
}

std::string key_of(const Frequency& k) { return join_ints(k); }

struct ApproxArgs {
    std::size_t d = 1;
    std::size_t n = 1;
    std::string input;
};

std::string cmd_approx(const Shared& s, const ApproxArgs& a) {
    const auto params = load_params(s);
    auto cfg = base_config("approx", params, s);
    cfg.add("d", std::to_string(a.d));
    cfg.add("n", std::to_string(a.n));
    cfg.add("input", a.input);

    std::ifstream in(a.input);
    if (!in) throw RangeViolation("cannot open coefficient file '" + a.input + "'");
    Json coeffs;
    try {
        in >> coeffs;
    } catch (const Json::exception& e) {
        throw RangeViolation(std::string("coefficient file is not valid JSON: ") + e.what());
    }
    if (!coeffs.is_object())
        throw RangeViolation("coefficient file must map \"k1,...,kd\" to [re, im]");
    FourierPoly f(a.d);
    for (auto& [key, value] : coeffs.items()) {
        if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
            !value[1].is_number())
            throw RangeViolation("coefficient for '" + key + "' must be [re, im]");
        f.set(parse_key(key, a.d), {value[0].get<double>(), value[1].get<double>()});
    }

    const auto opts = spectrum_options(s);
    const FourierPoly g = approximate(f, params, a.n, opts);
    Json kept = Json::object();
    for (const auto& [k, c] : g.terms()) kept[key_of(k)] = {c.real(), c.imag()};
    Json doc{{"config", cfg.to_json()},
             {"coefficients", kept},
             {"error", l2_error(f, g)},
             {"bound", worst_case_error(params, a.d, a.n, opts)},
             {"h_norm", jnum(h_norm(f, params))}};
    return doc.dump(2) + "\n";
}

std::string cmd_zeta(const Shared& s, double arg) {
    const auto z = riemann_zeta(arg);
    RunConfig cfg;
    cfg.add("command", "zeta");
    cfg.add("s", fmt17(arg));
    Json doc{{"config", cfg.to_json()},
             {"s", z.s},
             {"value", z.value},
             {"abs_error_bound", z.abs_error_bound}};
    if (s.format == "csv") {
        std::ostringstream os;
        cfg.write_csv_header(os);
        os << "s,value,abs_error_bound\n"
           << fmt17(z.s) << ',' << fmt17(z.value) << ',' << fmt17(z.abs_error_bound) << '\n';
        return os.str();
    }
    return doc.dump(2) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Worst-case L2 approximation in weighted Korobov spaces", "korobov"};
    app.require_subcommand(1);

    Shared spectrum_shared, complexity_shared, classify_shared, fit_shared, curse_shared,
        approx_shared, zeta_shared;

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "largest eigenvalues with their frequencies");
    spectrum->add_option("--d", spectrum_args.d, "dimension")->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--n", spectrum_args.n, "number of eigenvalues")->required()->check(CLI::PositiveNumber);
    add_shared(spectrum, spectrum_shared, "csv");

    ComplexityArgs complexity_args;
    auto* complexity = app.add_subcommand("complexity", "exact information complexity n(eps, d)");
    complexity->add_option("--d", complexity_args.d, "dimension")->check(CLI::PositiveNumber);
    complexity->add_option("--eps", complexity_args.eps, "error threshold in (0,1)");
    complexity->add_option("--eps-grid", complexity_args.eps_grid, "batch: a,b,c")->delimiter(',');
    complexity->add_option("--d-grid", complexity_args.d_grid, "batch: d1,d2,...")->delimiter(',');
    complexity_args.tau_opt =
        complexity->add_option("--tau", complexity_args.tau, "also report the zeta-product bound");
    add_shared(complexity, complexity_shared, "json");
    complexity_args.format_opt = complexity->get_option("--format");

    auto* classify_cmd = app.add_subcommand("classify", "tractability report");
    add_shared(classify_cmd, classify_shared, "json");

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "least-squares complexity exponent");
    fit->add_option("--d", fit_args.d, "dimension")->required()->check(CLI::PositiveNumber);
    fit->add_option("--eps-grid", fit_args.eps_grid, "decreasing epsilons, at least 4")
        ->required()
        ->delimiter(',');
    add_shared(fit, fit_shared, "json");

    CurseArgs curse_args;
    auto* curse = app.add_subcommand("curse", "3^d lower bound against exact counts");
    curse->add_option("--d-grid", curse_args.d_grid, "dimensions")->required()->delimiter(',');
    curse->add_option("--eps", curse_args.eps, "error threshold in (0,1)")->required();
    add_shared(curse, curse_shared, "csv");

    ApproxArgs approx_args;
    auto* approx = app.add_subcommand("approx", "apply the optimal algorithm to a polynomial");
    approx->add_option("--d", approx_args.d, "dimension")->required()->check(CLI::PositiveNumber);
    approx->add_option("--n", approx_args.n, "number of functionals")->required();
    approx->add_option("--input", approx_args.input, "coefficient JSON")->required();
    add_shared(approx, approx_shared, "json");

    double zeta_s = 2.0;
    auto* zeta = app.add_subcommand("zeta", "Riemann zeta for real s > 1");
    zeta->add_option("--s", zeta_s, "argument")->required();
    add_shared(zeta, zeta_shared, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kValidationError;
    }

    std::string text;
    const Shared* shared = nullptr;
    try {
        if (spectrum->parsed()) {
            shared = &spectrum_shared;
            text = cmd_spectrum(spectrum_shared, spectrum_args);
        } else if (complexity->parsed()) {
            shared = &complexity_shared;
            text = cmd_complexity(complexity_shared, complexity_args);
        } else if (classify_cmd->parsed()) {
            shared = &classify_shared;
            text = cmd_classify(classify_shared);
        } else if (fit->parsed()) {
            shared = &fit_shared;
            text = cmd_fit(fit_shared, fit_args);
        } else if (curse->parsed()) {
            shared = &curse_shared;
            text = cmd_curse(curse_shared, curse_args);
        } else if (approx->parsed()) {
            shared = &approx_shared;
            text = cmd_approx(approx_shared, approx_args);
        } else {
            shared = &zeta_shared;
            text = cmd_zeta(zeta_shared, zeta_s);
        }
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }

    if (!shared->out.empty()) {
        std::ofstream file(shared->out, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << shared->out << "'\n";
            return kValidationError;
        }
        file << text;
    } else {
        out << text;
    }
    return kOk;
}

}  // namespace korobov::cli
