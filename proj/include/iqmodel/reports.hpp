#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "iqmodel/model_config.hpp"
#include "iqmodel/optimizer.hpp"
#include "iqmodel/oracle_sim.hpp"
#include "iqmodel/solver.hpp"
#include "iqmodel/state_space.hpp"

namespace iqm {

// Parses the JSON problem description:
//   {"N": 3, "types": [{"name": "mul",
//                       "arrival": {"kind": "poisson", "mean": 1.5},
//                       "rho": 0.75, "fu": 2, "unit_cost": 1.0}, ...]}
// Arrival kind "table" takes {"kind": "table", "pmf": [p0, p1, ...]}.
// Throws ConfigError with a field diagnostic on malformed input and
// DomainError on invalid parameter values.
ModelConfig load_model_config(const std::filesystem::path& path);
ModelConfig parse_model_config(const std::string& json_text, const std::string& source_name);

// Report writers. Field order is fixed and every value is printed with six
// decimal places (residuals in scientific notation), so identical inputs
// produce byte-identical files.
void write_solve_report(std::ostream& out, const SteadyStateReport& report,
                        const ModelConfig& config);
void write_pi_csv(std::ostream& out, const std::vector<double>& pi, const StateSpace& space,
                  const ModelConfig& config);
void write_sim_report(std::ostream& out, const SimReport& report, const ModelConfig& config);
void write_sim_pi_csv(std::ostream& out, const SimReport& report, const StateSpace& space,
                      const ModelConfig& config);
void write_optimize_report(std::ostream& out, const OptimizationResult& result,
                           const ModelConfig& config, const std::string& algorithm,
                           const std::optional<std::string>& convexity_diagnostic);
void write_surface_csv(std::ostream& out, const OptimizationResult& result, int type_count);
void write_validate_report(std::ostream& out, const SteadyStateReport& analytic,
                           const SimReport& empirical, const ModelConfig& config,
                           double tv, double threshold, bool passed);

// Human-readable solve summary for standard output; includes the flow-ratio
// rebalancing suggestion when the ratios are uneven.
void print_solve_summary(std::ostream& out, const SteadyStateReport& report,
                         const ModelConfig& config);

std::string format_fixed(double value, int places = 6);

}  // namespace iqm
