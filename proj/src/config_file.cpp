#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "irscf/errors.hpp"
#include "irscf/harness.hpp"

namespace irscf {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

double to_double(std::string_view key, std::string_view v) {
    v = trim(v);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw ConfigError(std::string(key), "expected a number, got '" + std::string(v) + "'");
    return out;
}

long long to_int(std::string_view key, std::string_view v) {
    v = trim(v);
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw ConfigError(std::string(key), "expected an integer, got '" + std::string(v) + "'");
    return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

const std::vector<std::string_view> kSweepParams = {"kappa2", "N", "chi", "irs_pathloss_exponent", "alpha", "b"};

}  // namespace

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::RjdContinuous: return "RJD-Continuous";
        case Scheme::Rjd2Bit: return "RJD-2bit";
        case Scheme::Rjd1Bit: return "RJD-1bit";
        case Scheme::ConventionalCF: return "Conventional-CF";
        case Scheme::UpperBound: return "Upper-Bound";
        case Scheme::Rjd: return "RJD";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    const std::string n = lower(trim(name));
    for (Scheme s : {Scheme::RjdContinuous, Scheme::Rjd2Bit, Scheme::Rjd1Bit, Scheme::ConventionalCF,
                     Scheme::UpperBound, Scheme::Rjd})
        if (lower(scheme_name(s)) == n) return s;
    throw ConfigError("schemes", "unknown scheme '" + std::string(name) + "'");
}

std::vector<Scheme> default_schemes() {
    return {Scheme::ConventionalCF, Scheme::Rjd1Bit, Scheme::Rjd2Bit, Scheme::RjdContinuous, Scheme::UpperBound};
}

void apply_setting(ExperimentSpec& spec, std::string_view key_in, std::string_view value) {
    const std::string key(trim(key_in));
    SystemConfig& c = spec.base;
    auto i = [&] { return static_cast<int>(to_int(key, value)); };
    auto f = [&] { return to_double(key, value); };

    if (key == "L") c.L = i();
    else if (key == "R") c.R = i();
    else if (key == "K") c.K = i();
    else if (key == "M_B") c.M_B = i();
    else if (key == "M_U") c.M_U = i();
    else if (key == "N") c.N = i();
    else if (key == "N_h") c.N_h = i();
    else if (key == "d") c.d = i();
    else if (key == "alpha") c.alpha = f();
    else if (key == "P_max") c.p_max_w = f();
    else if (key == "sigma2_dBm") c.sigma2_w = dbm_to_watts(f());
    else if (key == "kappa2") {
        const double v = f();
        if (!(v >= 0.0 && v < 1.0)) throw ConfigError(key, "must lie in [0, 1)");
        c.kappa2_D = c.kappa2_G = c.kappa2_S = v;
    }
    else if (key == "kappa2_D") c.kappa2_D = f();
    else if (key == "kappa2_G") c.kappa2_G = f();
    else if (key == "kappa2_S") c.kappa2_S = f();
    else if (key == "beta") c.beta_G = c.beta_S = f();
    else if (key == "beta_G") c.beta_G = f();
    else if (key == "beta_S") c.beta_S = f();
    else if (key == "C0_dB") c.C0_dB = f();
    else if (key == "d0") c.d0 = f();
    else if (key == "p_D") c.p_D = f();
    else if (key == "p_S") c.p_S = f();
    else if (key == "p_G") c.p_G = f();
    else if (key == "irs_pathloss_exponent") c.p_S = c.p_G = f();
    else if (key == "b") c.b = i();
    else if (key == "chi") c.chi = f();
    else if (key == "eps") c.eps = f();
    else if (key == "max_iters") c.max_iters = i();
    else if (key == "aso_eps") c.aso_eps = f();
    else if (key == "aso_max_sweeps") c.aso_max_sweeps = i();
    else if (key == "bisection_eps") c.bisection_eps = f();
    else if (key == "mc_samples") c.mc_samples = i();
    else if (key == "ap_height") c.ap_height = f();
    else if (key == "irs_height") c.irs_height = f();
    else if (key == "ue_height") c.ue_height = f();
    else if (key == "ue_radius") c.ue_radius = f();
    else if (key == "realizations") spec.realizations = i();
    else if (key == "seed") spec.seed = static_cast<std::uint64_t>(to_int(key, value));
    else if (key == "threads") spec.threads = i();
    else if (key == "output") spec.output = std::string(trim(value));
    else if (key == "format") {
        const std::string v = lower(trim(value));
        if (v == "csv") spec.format = OutputFormat::Csv;
        else if (v == "records") spec.format = OutputFormat::Records;
        else throw ConfigError(key, "expected csv or records");
    } else if (key == "schemes") {
        spec.schemes.clear();
        for (auto name : split(value, ',')) spec.schemes.push_back(parse_scheme(name));
    } else if (key == "sweep") {
        apply_sweep(spec, value);
    } else {
        throw ConfigError(key, "unknown key");
    }
}

void apply_sweep(ExperimentSpec& spec, std::string_view arg) {
    const std::size_t eq = arg.find('=');
    const std::string_view name = trim(arg.substr(0, eq));
    if (std::find(kSweepParams.begin(), kSweepParams.end(), name) == kSweepParams.end())
        throw ConfigError("sweep", "unknown sweep variable '" + std::string(name) + "'");
    spec.sweep_param = std::string(name);
    spec.sweep_values.clear();
    if (eq == std::string_view::npos) return;
    for (auto v : split(arg.substr(eq + 1), ',')) spec.sweep_values.push_back(to_double("sweep", v));
}

ExperimentSpec parse_config(std::string_view text) {
    ExperimentSpec spec;
    int line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no), "expected key = value");
        apply_setting(spec, line.substr(0, eq), line.substr(eq + 1));
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void ExperimentSpec::validate() const {
    base.validate();
    if (realizations < 1) throw ConfigError("realizations", "must be >= 1");
    if (schemes.empty()) throw ConfigError("schemes", "must not be empty");
    if (threads < 1) throw ConfigError("threads", "must be >= 1");
    for (double v : sweep_grid(*this)) config_at(base, sweep_param, v).validate();
}

}  // namespace irscf
