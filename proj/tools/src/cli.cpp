// Copyright 2026 The qig Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qig_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "qig/basisopt.hpp"
#include "qig/entropy.hpp"
#include "qig/error.hpp"
#include "qig/expsim.hpp"
#include "qig/geometry.hpp"
#include "qig/metrics.hpp"
#include "qig/version.hpp"

namespace qig::cli {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Kind { Real, Int, UInt, Text };

struct Key {
    const char* name;
    Kind kind;
    const char* help;
};

const std::vector<Key>& keys() {
    static const std::vector<Key> k = {
        {"r1", Kind::Real, "Bloch radius of the first state"},
        {"r2", Kind::Real, "Bloch radius of the second state"},
        {"theta", Kind::Real, "angle between the Bloch vectors (rad)"},
        {"beta_grid", Kind::Int, "number of beta samples on [0, 2pi)"},
        {"grid", Kind::Int, "grid size (theta samples, radial rings or r samples)"},
        {"epsilon", Kind::Real, "ellipse level"},
        {"seed", Kind::UInt, "random seed"},
        {"steps", Kind::Int, "Monte-Carlo steps per chain"},
        {"step_size", Kind::Real, "initial Monte-Carlo rotation size"},
        {"restarts", Kind::Int, "independent Monte-Carlo chains"},
        {"blocks", Kind::Int, "largest block size in the benchmark ladder (1..3)"},
        {"copies", Kind::Int, "copies in the discrimination experiment"},
        {"strategy", Kind::Text, "single or entangled"},
        {"phi1", Kind::Real, "polar angle of the first geodesic endpoint (rad)"},
        {"phi2", Kind::Real, "polar angle of the second geodesic endpoint (rad)"},
        {"direction", Kind::Real, "initial tangent angle; switches geodesic to an initial value problem"},
        {"max_length", Kind::Real, "arc length limit of an initial value geodesic"},
        {"stride", Kind::Int, "write every k-th geodesic sample"},
        {"angles", Kind::Int, "points per ring in the ellipse field"},
    };
    return k;
}

std::string snake(std::string s) {
    std::replace(s.begin(), s.end(), '-', '_');
    return s;
}

std::string dash(std::string s) {
    std::replace(s.begin(), s.end(), '_', '-');
    return s;
}

double as_real(const Json& v, const std::string& key) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t pos = 0;
        try {
            const double x = std::stod(s, &pos);
            if (pos == s.size()) {
                return x;
            }
        } catch (const std::exception&) {
        }
    }
    throw ValidationError(key + ": expected a number, got " + v.dump());
}

long long as_int(const Json& v, const std::string& key) {
    if (v.is_number_integer()) {
        return v.get<long long>();
    }
    if (v.is_number_float()) {
        const double x = v.get<double>();
        if (std::floor(x) == x && std::abs(x) < 9e15) {
            return static_cast<long long>(x);
        }
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t pos = 0;
        try {
            const long long x = std::stoll(s, &pos);
            if (pos == s.size()) {
                return x;
            }
        } catch (const std::exception&) {
        }
    }
    throw ValidationError(key + ": expected an integer, got " + v.dump());
}

std::uint64_t as_uint(const Json& v, const std::string& key) {
    if (v.is_number_unsigned()) {
        return v.get<std::uint64_t>();
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t pos = 0;
        try {
            if (!s.empty() && s.front() != '-') {
                const std::uint64_t x = std::stoull(s, &pos);
                if (pos == s.size()) {
                    return x;
                }
            }
        } catch (const std::exception&) {
        }
    }
    const long long x = as_int(v, key);
    if (x < 0) {
        throw ValidationError(key + ": must be nonnegative");
    }
    return static_cast<std::uint64_t>(x);
}

int as_small_int(const Json& v, const std::string& key) {
    const long long x = as_int(v, key);
    if (x < -1000000000LL || x > 1000000000LL) {
        throw ValidationError(key + ": out of range");
    }
    return static_cast<int>(x);
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ValidationError(message);
    }
}

std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string emit_table(const Json& header, const Table& t, Format format,
                       const Json& summary = Json::object()) {
    std::ostringstream os;
    if (format == Format::Csv) {
        os << "# " << header.dump() << '\n';
        if (!summary.empty()) {
            os << "# " << summary.dump() << '\n';
        }
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            os << (c ? "," : "") << t.columns[c];
        }
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                os << (c ? "," : "") << fmt15(row[c]);
            }
            os << '\n';
        }
        return os.str();
    }
    Json j = header;
    for (const auto& [k, v] : summary.items()) {
        j[k] = v;
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        Json col = Json::array();
        for (const auto& row : t.rows) {
            col.push_back(row[c]);
        }
        j[t.columns[c]] = std::move(col);
    }
    os << j.dump(2) << '\n';
    return os.str();
}

std::string emit_record(const Json& record, Format format) {
    std::ostringstream os;
    if (format == Format::Json) {
        os << record.dump(2) << '\n';
        return os.str();
    }
    os << "key,value\n";
    for (const auto& [k, v] : record.items()) {
        os << k << ',';
        if (v.is_number_float()) {
            os << fmt15(v.get<double>());
        } else if (v.is_string()) {
            os << v.get<std::string>();
        } else {
            os << v.dump();
        }
        os << '\n';
    }
    return os.str();
}

std::pair<DensityMatrix, DensityMatrix> pair_states(const Json& h) {
    const CanonicalPair pair{h["r1"].get<double>(), h["r2"].get<double>(), h["theta"].get<double>()};
    require(pair.r1 >= 0.0 && pair.r1 < 1.0, "r1 must lie in [0, 1)");
    require(pair.r2 >= 0.0 && pair.r2 < 1.0, "r2 must lie in [0, 1)");
    return pair.states();
}

std::string cmd_sweep_beta(const Json& h, Format format) {
    const double r1 = h["r1"], r2 = h["r2"], theta = h["theta"];
    const int n = h["beta_grid"];
    require(n >= 2, "beta_grid must be at least 2");
    const auto [rho1, rho2] = pair_states(h);
    const double sq = umegaki_entropy(rho1, rho2);
    Table t{{"beta", "s_measured", "s_quantum"}, {}};
    for (int k = 0; k < n; ++k) {
        const double beta = 2.0 * kPi * k / n;
        t.rows.push_back({beta, qubit_measured_entropy(r1, r2, theta, beta), sq});
    }
    return emit_table(h, t, format);
}

std::string cmd_sweep_theta(const Json& h, Format format) {
    const double r1 = h["r1"], r2 = h["r2"];
    const int n = h["grid"];
    require(n >= 2, "grid must be at least 2");
    Table t{{"theta", "s_star", "s_quantum", "gap"}, {}};
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * kPi * k / (n - 1);
        Json point = {{"r1", r1}, {"r2", r2}, {"theta", theta}};
        const auto [rho1, rho2] = pair_states(point);
        const double sq = umegaki_entropy(rho1, rho2);
        const double s = optimize_beta(r1, r2, theta).value;
        t.rows.push_back({theta, s, sq, sq - s});
    }
    return emit_table(h, t, format);
}

std::string cmd_ellipse_field(const Json& h, Format format) {
    const int n = h["grid"];
    const int m = h["angles"];
    const double eps = h["epsilon"];
    require(n >= 1, "grid must be at least 1");
    require(m >= 1, "angles must be at least 1");
    const auto records = ellipse_field(polar_grid(n, m, n / (n + 1.0)), eps);
    Table t{{"x", "z", "r", "orientation", "bh_radial", "bh_tangential", "bkm_radial",
             "bkm_tangential", "bh_angular", "bkm_angular"},
            {}};
    for (const auto& e : records) {
        t.rows.push_back({e.x, e.z, e.r, e.orientation, e.bh_radial, e.bh_tangential, e.bkm_radial,
                          e.bkm_tangential, e.bh_angular, e.bkm_angular});
    }
    return emit_table(h, t, format);
}

std::string cmd_curvature(const Json& h, Format format) {
    const int n = h["grid"];
    require(n >= 1, "grid must be at least 1");
    Table t{{"r", "R"}, {}};
    for (int k = 1; k <= n; ++k) {
        const double r = static_cast<double>(k) / (n + 1);
        t.rows.push_back({r, bkm_curvature(r)});
    }
    return emit_table(h, t, format);
}

const char* stop_name(GeodesicStop s) {
    switch (s) {
    case GeodesicStop::Boundary:
        return "boundary";
    case GeodesicStop::Event:
        return "endpoint";
    case GeodesicStop::MaxLength:
        break;
    }
    return "max_length";
}

std::string cmd_geodesic(const Json& h, Format format) {
    const double r1 = h["r1"], phi1 = h["phi1"];
    const int stride = h["stride"];
    require(stride >= 1, "stride must be at least 1");
    require(r1 >= 0.0 && r1 < 1.0, "r1 must lie in [0, 1)");
    GeodesicPath path;
    Json summary;
    if (h.contains("direction")) {
        GeodesicOptions opts;
        opts.max_length = h["max_length"];
        require(opts.max_length > 0.0, "max_length must be positive");
        path = geodesic_ivp(std::asin(r1), phi1, h["direction"].get<double>(), opts);
    } else {
        const double r2 = h["r2"], phi2 = h["phi2"];
        require(r2 >= 0.0 && r2 < 1.0, "r2 must lie in [0, 1)");
        BvpDiagnostics diag;
        path = geodesic_bvp({r1, phi1}, {r2, phi2}, &diag);
        summary["direction"] = diag.direction;
        summary["endpoint_error"] = diag.endpoint_error;
        summary["shooting_iterations"] = diag.iterations;
    }
    summary["length"] = path.length;
    summary["energy"] = path.energy;
    summary["momentum"] = path.momentum;
    summary["stop"] = stop_name(path.stop);
    summary["max_energy_drift"] = path.max_energy_drift;
    summary["max_momentum_drift"] = path.max_momentum_drift;
    Table t{{"s", "r", "phi", "E", "J"}, {}};
    const std::size_t count = path.samples.size();
    for (std::size_t i = 0; i < count; ++i) {
        if (i % static_cast<std::size_t>(stride) != 0 && i + 1 != count) {
            continue;
        }
        const auto& s = path.samples[i];
        t.rows.push_back({s.s, s.r(), s.phi, s.energy, s.momentum});
    }
    return emit_table(h, t, format, summary);
}

std::string cmd_benchmark(const Json& h, Format format) {
    const int blocks = h["blocks"];
    require(blocks >= 1 && blocks <= 3, "blocks must lie in 1..3");
    McConfig mc;
    mc.steps = h["steps"];
    mc.step_size = h["step_size"];
    mc.seed = h["seed"];
    mc.restarts = h["restarts"];
    mc.validate();
    const double r1 = h["r1"], r2 = h["r2"], theta = h["theta"];
    const auto [rho1, rho2] = pair_states(h);

    Json j = h;
    std::vector<double> ladder;
    const BetaOptimum single = optimize_beta(r1, r2, theta);
    j["single_qubit"] = single.value;
    ladder.push_back(single.value);
    BetaOptimum bell;
    if (blocks >= 2) {
        bell = two_qubit_bell_strategy(r1, r2, theta);
        j["bell_two_qubit"] = bell.value;
        const McResult mc2 = mc_optimize(rho1, rho2, 2, mc);
        j["mc_two_qubit"] = mc2.per_qubit;
        ladder.push_back(bell.value);
        ladder.push_back(mc2.per_qubit);
    }
    if (blocks >= 3) {
        const McResult mc3 = mc_optimize(rho1, rho2, 3, mc);
        j["mc_three_qubit"] = mc3.per_qubit;
        ladder.push_back(mc3.per_qubit);
    }
    const double sq = umegaki_entropy(rho1, rho2);
    j["quantum_relative_entropy"] = sq;
    j["single_qubit_beta"] = single.beta;
    if (blocks >= 2) {
        j["bell_two_qubit_beta"] = bell.beta;
    }
    j["ladder_monotone"] = std::is_sorted(ladder.begin(), ladder.end());
    j["below_quantum"] = std::all_of(ladder.begin(), ladder.end(), [&](double v) { return v < sq; });
    return emit_record(j, format);
}

std::string cmd_simulate(const Json& h, Format format) {
    const long long copies = h["copies"];
    require(copies >= 1, "copies must be at least 1");
    const Strategy strategy = parse_strategy(h["strategy"].get<std::string>());
    const auto [rho1, rho2] = pair_states(h);
    Rng rng(h["seed"].get<std::uint64_t>());
    const DiscriminationResult res = run_discrimination(rho1, rho2, strategy, copies, rng);
    Json j = h;
    j["strategy"] = to_string(res.strategy);
    j["rate"] = res.rate;
    j["stderr"] = res.std_error;
    j["analytic_rate"] = res.analytic_rate;
    j["beta"] = res.beta;
    j["llr"] = res.record.llr;
    j["decided_rho1"] = res.record.decided_rho1;
    return emit_record(j, format);
}

using Handler = std::function<std::string(const Json&, Format)>;

const std::map<std::string, std::pair<Handler, const char*>>& handlers() {
    static const std::map<std::string, std::pair<Handler, const char*>> h = {
        {"sweep-beta", {cmd_sweep_beta, "measured relative entropy against the basis angle"}},
        {"sweep-theta", {cmd_sweep_theta, "optimized classical and quantum relative entropy against theta"}},
        {"ellipse-field", {cmd_ellipse_field, "BH and BKM ellipse semi-axes on a polar grid"}},
        {"curvature", {cmd_curvature, "scalar curvature of the BKM metric against r"}},
        {"geodesic", {cmd_geodesic, "BKM geodesic between two points or from an initial direction"}},
        {"benchmark", {cmd_benchmark, "per-qubit discrimination ladder up to three-qubit blocks"}},
        {"simulate", {cmd_simulate, "sampled discrimination experiment"}},
    };
    return h;
}

void write_error(std::ostream& err, const char* kind, const std::string& message, int code) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    j["exit_code"] = code;
    err << j.dump() << '\n';
}

} // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c = {"sweep-beta", "sweep-theta", "ellipse-field", "curvature",
                                               "geodesic",   "benchmark",   "simulate"};
    return c;
}

Format default_format(const std::string& command) {
    return (command == "benchmark" || command == "simulate") ? Format::Json : Format::Csv;
}

void apply_json(Params& p, const Json& j) {
    require(j.is_object(), "config must be a JSON object");
    for (const auto& [raw_key, v] : j.items()) {
        const std::string k = snake(raw_key);
        if (k == "command" || k == "version" || k == "format" || k == "out") {
            continue;
        }
        if (k == "r1") {
            p.r1 = as_real(v, k);
        } else if (k == "r2") {
            p.r2 = as_real(v, k);
        } else if (k == "theta") {
            p.theta = as_real(v, k);
        } else if (k == "beta_grid") {
            p.beta_grid = as_small_int(v, k);
        } else if (k == "grid") {
            p.grid = as_small_int(v, k);
        } else if (k == "epsilon") {
            p.epsilon = as_real(v, k);
        } else if (k == "seed") {
            p.seed = as_uint(v, k);
        } else if (k == "steps") {
            p.steps = static_cast<long>(as_int(v, k));
        } else if (k == "step_size") {
            p.step_size = as_real(v, k);
        } else if (k == "restarts") {
            p.restarts = as_small_int(v, k);
        } else if (k == "blocks") {
            p.blocks = as_small_int(v, k);
        } else if (k == "copies") {
            p.copies = as_int(v, k);
        } else if (k == "strategy") {
            require(v.is_string(), "strategy must be a string");
            p.strategy = v.get<std::string>();
        } else if (k == "phi1") {
            p.phi1 = as_real(v, k);
        } else if (k == "phi2") {
            p.phi2 = as_real(v, k);
        } else if (k == "direction") {
            p.direction = as_real(v, k);
        } else if (k == "max_length") {
            p.max_length = as_real(v, k);
        } else if (k == "stride") {
            p.stride = as_small_int(v, k);
        } else if (k == "angles") {
            p.angles = as_small_int(v, k);
        } else {
            throw ValidationError("unknown parameter '" + raw_key + "'");
        }
    }
}

Json load_config(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '#') {
        const auto eol = text.find('\n', first);
        text = text.substr(first + 1, eol == std::string::npos ? std::string::npos : eol - first - 1);
    }
    Json j = Json::parse(text, nullptr, false);
    require(!j.is_discarded() && j.is_object(), "config file " + path + " is not a JSON object");
    return j;
}

Json resolved_params(const RunConfig& cfg) {
    const auto& c = cfg.command;
    require(handlers().count(c) > 0, "unknown command '" + c + "'");
    const Params& p = cfg.params;
    const bool fig3 = c == "sweep-theta";
    const double r1 = p.r1.value_or(0.9);
    const double r2 = p.r2.value_or(fig3 ? 0.9 : 0.5);
    for (double x : {r1, r2, p.theta, p.epsilon, p.phi1, p.max_length, p.step_size}) {
        require(std::isfinite(x), "numeric parameters must be finite");
    }

    Json j;
    j["command"] = c;
    j["version"] = kVersion;
    j["seed"] = p.seed;
    if (c == "sweep-beta") {
        j["r1"] = r1;
        j["r2"] = r2;
        j["theta"] = p.theta;
        j["beta_grid"] = p.beta_grid;
    } else if (c == "sweep-theta") {
        j["r1"] = r1;
        j["r2"] = r2;
        j["grid"] = p.grid.value_or(181);
    } else if (c == "ellipse-field") {
        j["grid"] = p.grid.value_or(6);
        j["angles"] = p.angles;
        j["epsilon"] = p.epsilon;
    } else if (c == "curvature") {
        j["grid"] = p.grid.value_or(99);
    } else if (c == "geodesic") {
        j["r1"] = r1;
        j["phi1"] = p.phi1;
        if (p.direction) {
            require(std::isfinite(*p.direction), "direction must be finite");
            j["direction"] = *p.direction;
            j["max_length"] = p.max_length;
        } else {
            j["r2"] = r2;
            j["phi2"] = p.phi2.value_or(p.theta);
        }
        j["stride"] = p.stride;
    } else if (c == "benchmark") {
        j["r1"] = r1;
        j["r2"] = r2;
        j["theta"] = p.theta;
        j["blocks"] = p.blocks;
        j["steps"] = p.steps;
        j["step_size"] = p.step_size;
        j["restarts"] = p.restarts;
    } else if (c == "simulate") {
        j["r1"] = r1;
        j["r2"] = r2;
        j["theta"] = p.theta;
        j["strategy"] = to_string(parse_strategy(p.strategy));
        j["copies"] = p.copies;
    }
    return j;
}

std::string render(const RunConfig& cfg) {
    const Json h = resolved_params(cfg);
    return handlers().at(cfg.command).first(h, cfg.format);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum information geometry toolkit"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();

    std::map<std::string, std::string> raw;
    std::vector<std::pair<std::string, CLI::Option*>> options;
    for (const auto& k : keys()) {
        const std::string name = k.name;
        options.emplace_back(name, app.add_option("--" + dash(name), raw[name], k.help));
    }
    std::string format;
    std::string out_path;
    std::string config;
    auto* format_opt = app.add_option("--format", format, "csv or json")
                           ->check(CLI::IsMember({"csv", "json"}));
    auto* out_opt = app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--config", config, "JSON config with the same keys as the flags");
    for (const auto& name : commands()) {
        app.add_subcommand(name, handlers().at(name).second);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        write_error(err, "validation_error", e.what(), 2);
        return 2;
    }

    RunConfig cfg;
    cfg.command = app.get_subcommands().front()->get_name();
    try {
        Json flags = Json::object();
        if (!config.empty()) {
            const Json file = load_config(config);
            if (file.contains("command")) {
                require(file["command"] == cfg.command,
                        "config was written by '" + file["command"].dump() + "'");
            }
            apply_json(cfg.params, file);
            if (file.contains("format") && file["format"].is_string()) {
                format = format_opt->count() ? format : file["format"].get<std::string>();
            }
            if (file.contains("out") && file["out"].is_string() && !out_opt->count()) {
                out_path = file["out"].get<std::string>();
            }
        }
        for (const auto& [name, opt] : options) {
            if (opt->count()) {
                flags[name] = raw[name];
            }
        }
        apply_json(cfg.params, flags);
        if (format.empty()) {
            cfg.format = default_format(cfg.command);
        } else {
            require(format == "csv" || format == "json", "format must be csv or json");
            cfg.format = format == "csv" ? Format::Csv : Format::Json;
        }
        const std::string text = render(cfg);
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            require(static_cast<bool>(f), "cannot open output file " + out_path);
            f << text;
            require(static_cast<bool>(f), "failed writing " + out_path);
        }
        return 0;
    } catch (const ValidationError& e) {
        write_error(err, "validation_error", e.what(), 2);
        return 2;
    } catch (const NumericalError& e) {
        write_error(err, "numerical_error", e.what(), 3);
        return 3;
    } catch (const std::exception& e) {
        write_error(err, "internal_error", e.what(), 1);
        return 1;
    }
}

} // namespace qig::cli
