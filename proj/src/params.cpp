#include "korobov/params.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "korobov/errors.hpp"

namespace korobov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool in_unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

// Shortest of 15..17 significant digits that reads back as x.
std::string num(double x) {
    char buf[40];
    for (int digits = 15; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

void check_weights(const WeightSpec& spec) {
    std::visit(
        Overloaded{
            [](const weights::Constant& w) {
                if (!in_unit_interval(w.c))
                    throw RangeViolation("constant weight must lie in [0,1], got " + num(w.c));
            },
            [](const weights::PolyDecay& w) {
                if (!std::isfinite(w.a) || w.a < 0.0)
                    throw RangeViolation("polynomial decay exponent must be >= 0, got " + num(w.a));
            },
            [](const weights::Geometric& w) {
                if (!in_unit_interval(w.q))
                    throw RangeViolation("geometric ratio must lie in [0,1], got " + num(w.q));
            },
            [](const weights::Explicit& w) {
                if (w.values.empty()) throw RangeViolation("explicit weight list is empty");
                for (std::size_t i = 0; i < w.values.size(); ++i) {
                    if (!in_unit_interval(w.values[i]))
                        throw RangeViolation("gamma_" + std::to_string(i + 1) + " = " +
                                             num(w.values[i]) + " is outside [0,1]");
                    if (i > 0 && w.values[i] > w.values[i - 1])
                        throw MonotonicityViolation(
                            "weights must be nonincreasing: gamma_" + std::to_string(i + 1) +
                                " > gamma_" + std::to_string(i),
                            i + 1);
                }
            },
        },
        spec);
}

void check_alpha1(double a) {
    if (!std::isfinite(a) || a <= 0.5)
        throw RangeViolation("smoothness alpha_1 must exceed 1/2, got " + num(a));
}

void check_smoothness(const SmoothnessSpec& spec) {
    std::visit(Overloaded{
                   [](const smoothness::Constant& s) { check_alpha1(s.alpha); },
                   [](const smoothness::LogAffine& s) {
                       check_alpha1(s.alpha);
                       if (!std::isfinite(s.b) || s.b < 0.0)
                           throw RangeViolation("log-affine slope b must be >= 0, got " +
                                                num(s.b));
                   },
                   [](const smoothness::Explicit& s) {
                       if (s.values.empty())
                           throw RangeViolation("explicit smoothness list is empty");
                       check_alpha1(s.values.front());
                       for (std::size_t i = 1; i < s.values.size(); ++i) {
                           if (!std::isfinite(s.values[i]))
                               throw RangeViolation("alpha_" + std::to_string(i + 1) +
                                                    " is not finite");
                           if (s.values[i] < s.values[i - 1])
                               throw MonotonicityViolation(
                                   "smoothness must be nondecreasing: alpha_" +
                                       std::to_string(i + 1) + " < alpha_" + std::to_string(i),
                                   i + 1);
                       }
                   },
               },
               spec);
}

double tail_lookup(const std::vector<double>& values, std::size_t j) {
    return values[std::min(j, values.size()) - 1];
}

double parse_real(std::string_view text, std::string_view context) {
    std::string s(text);
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
        throw RangeViolation("cannot parse number '" + s + "' in " + std::string(context));
    return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view context) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_real(text.substr(pos, comma - pos), context));
        pos = comma + 1;
    }
    return out;
}

std::pair<std::string_view, std::string_view> split_kind(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw RangeViolation("parameter spec '" + std::string(text) + "' lacks 'kind:'");
    return {text.substr(0, colon), text.substr(colon + 1)};
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += num(values[i]);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

KorobovParams::KorobovParams(WeightSpec weights, SmoothnessSpec smoothness)
    : weights_(std::move(weights)), smoothness_(std::move(smoothness)) {
    check_weights(weights_);
    check_smoothness(smoothness_);
}

double KorobovParams::gamma(std::size_t j) const {
    const auto jd = static_cast<double>(j);
    return std::visit(Overloaded{
                          [](const weights::Constant& w) { return w.c; },
                          [jd](const weights::PolyDecay& w) { return std::pow(jd, -w.a); },
                          [jd](const weights::Geometric& w) { return std::pow(w.q, jd); },
                          [j](const weights::Explicit& w) { return tail_lookup(w.values, j); },
                      },
                      weights_);
}

double KorobovParams::alpha(std::size_t j) const {
    const auto jd = static_cast<double>(j);
    return std::visit(
        Overloaded{
            [](const smoothness::Constant& s) { return s.alpha; },
            [jd](const smoothness::LogAffine& s) { return s.alpha + s.b * std::log(jd); },
            [j](const smoothness::Explicit& s) { return tail_lookup(s.values, j); },
        },
        smoothness_);
}

std::vector<double> KorobovParams::gammas(std::size_t d) const {
    std::vector<double> out(d);
    for (std::size_t j = 0; j < d; ++j) out[j] = gamma(j + 1);
    return out;
}

std::vector<double> KorobovParams::alphas(std::size_t d) const {
    std::vector<double> out(d);
    for (std::size_t j = 0; j < d; ++j) out[j] = alpha(j + 1);
    return out;
}

DeltaEstimate delta(const KorobovParams& params,
                    std::optional<std::pair<std::size_t, std::size_t>> window) {
    const auto& spec = params.weights();
    if (const auto* w = std::get_if<weights::Constant>(&spec))
        return {w->c == 0.0 ? kInf : 0.0, true, std::nullopt};
    if (const auto* w = std::get_if<weights::PolyDecay>(&spec)) return {w->a, true, std::nullopt};
    if (const auto* w = std::get_if<weights::Geometric>(&spec))
        return {w->q < 1.0 ? kInf : 0.0, true, std::nullopt};

    const auto& values = std::get<weights::Explicit>(spec).values;
    if (!window) {
        const std::size_t j_max = std::max<std::size_t>(values.size(), 3);
        const std::size_t j_min = std::clamp<std::size_t>(values.size() / 2, 2, j_max - 1);
        window = {j_min, j_max};
    }
    const auto [j_min, j_max] = *window;
    if (j_min < 2 || j_min >= j_max)
        throw RangeViolation("delta window needs 2 <= j_min < j_max");

    double best = kInf;
    for (std::size_t j = j_min; j <= j_max; ++j) {
        const double g = params.gamma(j);
        if (g == 0.0) continue;
        best = std::min(best, -std::log(g) / std::log(static_cast<double>(j)));
    }
    return {std::max(best, 0.0), false, window};
}

WeightSpec parse_weight_spec(std::string_view text) {
    auto [kind, rest] = split_kind(trim(text));
    if (kind == "const") return weights::Constant{parse_real(rest, "--gamma const")};
    if (kind == "poly") return weights::PolyDecay{parse_real(rest, "--gamma poly")};
    if (kind == "geom") return weights::Geometric{parse_real(rest, "--gamma geom")};
    if (kind == "list") return weights::Explicit{parse_list(rest, "--gamma list")};
    throw RangeViolation("unknown weight kind '" + std::string(kind) +
                         "' (expected const, poly, geom, list)");
}

SmoothnessSpec parse_smoothness_spec(std::string_view text) {
    auto [kind, rest] = split_kind(trim(text));
    if (kind == "const") return smoothness::Constant{parse_real(rest, "--alpha const")};
    if (kind == "logaffine") {
        auto v = parse_list(rest, "--alpha logaffine");
        if (v.size() != 2) throw RangeViolation("--alpha logaffine expects two numbers: a,b");
        return smoothness::LogAffine{v[0], v[1]};
    }
    if (kind == "list") return smoothness::Explicit{parse_list(rest, "--alpha list")};
    throw RangeViolation("unknown smoothness kind '" + std::string(kind) +
                         "' (expected const, logaffine, list)");
}

std::string to_string(const WeightSpec& spec) {
    return std::visit(Overloaded{
                          [](const weights::Constant& w) { return "const:" + num(w.c); },
                          [](const weights::PolyDecay& w) { return "poly:" + num(w.a); },
                          [](const weights::Geometric& w) { return "geom:" + num(w.q); },
                          [](const weights::Explicit& w) { return "list:" + join(w.values); },
                      },
                      spec);
}

std::string to_string(const SmoothnessSpec& spec) {
    return std::visit(Overloaded{
                          [](const smoothness::Constant& s) { return "const:" + num(s.alpha); },
                          [](const smoothness::LogAffine& s) {
                              return "logaffine:" + num(s.alpha) + "," + num(s.b);
                          },
                          [](const smoothness::Explicit& s) { return "list:" + join(s.values); },
                      },
                      spec);
}

KorobovParams load_params_config(std::istream& in) {
    WeightSpec w = weights::Constant{1.0};
    SmoothnessSpec s = smoothness::Constant{1.0};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        auto eq = view.find('=');
        if (eq == std::string_view::npos)
            throw RangeViolation("config line " + std::to_string(lineno) + ": expected key=value");
        auto key = trim(view.substr(0, eq));
        auto value = trim(view.substr(eq + 1));
        if (key == "gamma")
            w = parse_weight_spec(value);
        else if (key == "alpha")
            s = parse_smoothness_spec(value);
        else
            throw RangeViolation("config line " + std::to_string(lineno) + ": unknown key '" +
                                 std::string(key) + "'");
    }
    return KorobovParams(std::move(w), std::move(s));
}

}  // namespace korobov
