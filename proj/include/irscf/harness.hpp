#pragma once

// Experiment sweeps: configuration loading, per-realization design and
// Monte Carlo scoring of each scheme, and result output.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irscf/scenario.hpp"

namespace irscf {

enum class Scheme { RjdContinuous, Rjd2Bit, Rjd1Bit, ConventionalCF, UpperBound, Rjd };

std::string_view scheme_name(Scheme s);
/// Case-insensitive; throws ConfigError("schemes", …) on unknown names.
Scheme parse_scheme(std::string_view name);
std::vector<Scheme> default_schemes();

enum class OutputFormat { Csv, Records };

struct ExperimentSpec {
    SystemConfig base;
    std::string sweep_param = "kappa2";  // kappa2, N, chi, irs_pathloss_exponent, alpha, b
    std::vector<double> sweep_values;    // empty means the base value only
    int realizations = 20;
    std::uint64_t seed = 1;
    std::vector<Scheme> schemes = default_schemes();
    std::string output;  // empty means stdout
    OutputFormat format = OutputFormat::Csv;
    int threads = 1;

    void validate() const;
};

/// Flat `key = value` text, `#` starts a comment. Unset keys keep their
/// defaults. Noise is given as sigma2_dBm. Throws ConfigError naming the key.
ExperimentSpec parse_config(std::string_view text);
ExperimentSpec load_config(const std::string& path);

/// Apply one `key = value` pair to the spec (shared by the file parser and
/// the CLI).
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Parse "NAME=v1,v2,…" into the spec's sweep fields.
void apply_sweep(ExperimentSpec& spec, std::string_view arg);

/// The sweep grid actually run (sweep_values, or the base value if empty).
std::vector<double> sweep_grid(const ExperimentSpec& spec);

/// Base config with the sweep variable set to `value`.
SystemConfig config_at(const SystemConfig& base, std::string_view param, double value);

/// Design-and-evaluation config of a scheme (phase bits, α = 0 or κ² = 0).
SystemConfig scheme_config(const SystemConfig& cfg, Scheme s);

struct RealizationOutcome {
    double rate_bits = 0.0;    // Monte Carlo average rate
    double det_rate_bits = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Design and score one realization. Channels depend only on (seed, index);
/// the W/θ initialization and the evaluation draws use their own streams, so
/// all schemes at a grid point see common random numbers.
RealizationOutcome run_realization(const SystemConfig& cfg, Scheme s, std::uint64_t seed, int index);

struct ResultRow {
    std::string sweep_param;
    double sweep_value = 0.0;
    Scheme scheme = Scheme::RjdContinuous;
    double mean_rate = 0.0;  // bits per channel use
    std::optional<double> std_err;
    int n_realizations = 0;
    double mean_iters = 0.0;
    double wall_time_s = 0.0;
    std::vector<double> rates;  // per realization, not written out
};

/// Rows ordered by (grid value, scheme) in spec order. Deterministic for a
/// given spec regardless of `threads`, except for wall_time_s.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

/// Throws std::invalid_argument on empty rows (nothing is written) and
/// std::runtime_error on I/O failure.
void write_results(const std::vector<ResultRow>& rows, std::ostream& out, OutputFormat format);
void write_results(const std::vector<ResultRow>& rows, const std::string& path, OutputFormat format);

}  // namespace irscf
