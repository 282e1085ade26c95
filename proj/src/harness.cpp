#include "irscf/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "irscf/errors.hpp"
#include "irscf/optim.hpp"

namespace irscf {
namespace {

// RNG stream tags under the master seed.
constexpr std::uint64_t kStreamChannel = 1;
constexpr std::uint64_t kStreamInit = 2;
constexpr std::uint64_t kStreamEval = 3;

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::vector<double> sweep_grid(const ExperimentSpec& spec) {
    if (!spec.sweep_values.empty()) return spec.sweep_values;
    const SystemConfig& c = spec.base;
    const std::string& p = spec.sweep_param;
    if (p == "kappa2") return {c.kappa2_D};
    if (p == "N") return {static_cast<double>(c.N)};
    if (p == "chi") return {c.chi};
    if (p == "irs_pathloss_exponent") return {c.p_G};
    if (p == "alpha") return {c.alpha};
    if (p == "b") return {static_cast<double>(c.b)};
    throw ConfigError("sweep", "unknown sweep variable '" + p + "'");
}

SystemConfig config_at(const SystemConfig& base, std::string_view param, double value) {
    SystemConfig c = base;
    auto as_int = [&](const char* field) {
        if (value != std::floor(value)) throw ConfigError(field, "sweep value must be an integer");
        return static_cast<int>(value);
    };
    if (param == "kappa2") {
        if (!(value >= 0.0 && value < 1.0)) throw ConfigError("kappa2", "must lie in [0, 1)");
        c.kappa2_D = c.kappa2_G = c.kappa2_S = value;
    }
    else if (param == "N") c.N = as_int("N");
    else if (param == "chi") c.chi = value;
    else if (param == "irs_pathloss_exponent") c.p_S = c.p_G = value;
    else if (param == "alpha") c.alpha = value;
    else if (param == "b") c.b = as_int("b");
    else throw ConfigError("sweep", "unknown sweep variable '" + std::string(param) + "'");
    return c;
}

SystemConfig scheme_config(const SystemConfig& cfg, Scheme s) {
    SystemConfig c = cfg;
    switch (s) {
        case Scheme::RjdContinuous: c.b = 0; break;
        case Scheme::Rjd2Bit: c.b = 2; break;
        case Scheme::Rjd1Bit: c.b = 1; break;
        case Scheme::ConventionalCF:
            c.alpha = 0.0;
            c.b = 0;
            break;
        case Scheme::UpperBound:
            c.kappa2_D = c.kappa2_G = c.kappa2_S = 0.0;
            c.b = 0;
            break;
        case Scheme::Rjd: break;
    }
    return c;
}

RealizationOutcome run_realization(const SystemConfig& base, Scheme s, std::uint64_t seed, int index) {
    const SystemConfig cfg = scheme_config(base, s);
    const auto idx = static_cast<std::uint64_t>(index);

    Rng ch_rng = make_rng(seed, kStreamChannel, idx);
    const Placement pl = make_placement(cfg, ch_rng);
    const ChannelEstimate est = generate_channels(cfg, pl, ch_rng);

    Rng init_rng = make_rng(seed, kStreamInit, idx);
    const BeamformerSet init = initial_beamformers(cfg, est, init_rng);
    const BcdResult res = run_bcd(cfg, est, init);

    Rng eval_rng = make_rng(seed, kStreamEval, idx);
    const McEstimate mc = avg_sum_rate_mc(cfg, est, res.bf, eval_rng, cfg.mc_samples);

    RealizationOutcome out;
    out.rate_bits = nats_to_bits(mc.mean);
    out.det_rate_bits = nats_to_bits(deterministic_rate(cfg, est, res.bf));
    out.iterations = res.iterations;
    out.converged = res.converged;
    return out;
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const std::vector<double> grid = sweep_grid(spec);
    const std::size_t n_schemes = spec.schemes.size();
    const std::size_t n_real = static_cast<std::size_t>(spec.realizations);
    const std::size_t n_jobs = grid.size() * n_schemes * n_real;

    std::vector<RealizationOutcome> outcomes(n_jobs);
    std::vector<double> seconds(n_jobs, 0.0);
    std::vector<std::exception_ptr> errors(n_jobs);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t j = next++; j < n_jobs; j = next++) {
            const std::size_t g = j / (n_schemes * n_real);
            const std::size_t s = (j / n_real) % n_schemes;
            const int r = static_cast<int>(j % n_real);
            const auto t0 = std::chrono::steady_clock::now();
            try {
                const SystemConfig cfg = config_at(spec.base, spec.sweep_param, grid[g]);
                outcomes[j] = run_realization(cfg, spec.schemes[s], spec.seed, r);
            } catch (...) {
                errors[j] = std::current_exception();
            }
            seconds[j] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const int n_threads = std::max(1, std::min<int>(spec.threads, static_cast<int>(n_jobs)));
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t j = 0; j < n_jobs; ++j) {
        if (!errors[j]) continue;
        const std::string where = spec.sweep_param + "=" + fmt6(grid[j / (n_schemes * n_real)]) + ", scheme " +
                                  std::string(scheme_name(spec.schemes[(j / n_real) % n_schemes])) +
                                  ", realization " + std::to_string(j % n_real);
        try {
            std::rethrow_exception(errors[j]);
        } catch (const std::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
    }

    std::vector<ResultRow> rows;
    for (std::size_t g = 0; g < grid.size(); ++g)
        for (std::size_t s = 0; s < n_schemes; ++s) {
            ResultRow row;
            row.sweep_param = spec.sweep_param;
            row.sweep_value = grid[g];
            row.scheme = spec.schemes[s];
            row.n_realizations = spec.realizations;
            double sum = 0.0, iters = 0.0;
            for (std::size_t r = 0; r < n_real; ++r) {
                const std::size_t j = (g * n_schemes + s) * n_real + r;
                row.rates.push_back(outcomes[j].rate_bits);
                sum += outcomes[j].rate_bits;
                iters += outcomes[j].iterations;
                row.wall_time_s += seconds[j];
            }
            row.mean_rate = sum / n_real;
            row.mean_iters = iters / n_real;
            if (n_real >= 2) {
                double ss = 0.0;
                for (double v : row.rates) ss += (v - row.mean_rate) * (v - row.mean_rate);
                row.std_err = std::sqrt(ss / (n_real - 1) / n_real);
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

void write_results(const std::vector<ResultRow>& rows, std::ostream& out, OutputFormat format) {
    if (rows.empty()) throw std::invalid_argument("write_results: no rows to write");
    if (format == OutputFormat::Csv) {
        out << "sweep_param,sweep_value,scheme,mean_rate,std_err,n_realizations,mean_iters,wall_time_s\n";
        for (const auto& r : rows) {
            out << r.sweep_param << ',' << fmt6(r.sweep_value) << ',' << scheme_name(r.scheme) << ','
                << fmt6(r.mean_rate) << ',' << (r.std_err ? fmt6(*r.std_err) : std::string()) << ','
                << r.n_realizations << ',' << fmt6(r.mean_iters) << ',' << fmt6(r.wall_time_s) << '\n';
        }
    } else {
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["sweep_param"] = r.sweep_param;
            j["sweep_value"] = r.sweep_value;
            j["scheme"] = scheme_name(r.scheme);
            j["mean_rate"] = r.mean_rate;
            j["std_err"] = r.std_err ? nlohmann::ordered_json(*r.std_err) : nlohmann::ordered_json(nullptr);
            j["n_realizations"] = r.n_realizations;
            j["mean_iters"] = r.mean_iters;
            j["wall_time_s"] = r.wall_time_s;
            out << j.dump() << '\n';
        }
    }
    if (!out) throw std::runtime_error("write_results: write failed");
}

void write_results(const std::vector<ResultRow>& rows, const std::string& path, OutputFormat format) {
    if (rows.empty()) throw std::invalid_argument("write_results: no rows to write");
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_results: cannot open '" + path + "'");
    write_results(rows, f, format);
    f.flush();
    if (!f) throw std::runtime_error("write_results: write to '" + path + "' failed");
}

}  // namespace irscf
