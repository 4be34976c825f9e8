#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hydro/problems.hpp"
#include "hydro/transfer.hpp"

namespace hydro {

enum class CheckMode { none, convergence, benchmark, repro };

struct RunConfig {
    Problem problem = Problem::vortex;
    int order = 2;
    IntegratorChoice integrator = IntegratorChoice::ader_onestep;
    SolverChoice solver = SolverChoice::hll;
    TransferStrategy strategy = TransferStrategy::skinny;
    int nx = 24, ny = 24, nz = 24;
    int split_x = 1, split_y = 1, split_z = 1;
    double cfl = -1.0;      // < 0 selects the per-order default (0.6 at O2, 0.4 at O3)
    double t_final = -1.0;  // exactly one of t_final / steps is active
    std::int64_t steps = 0;
    std::string out_path;
    CheckMode check = CheckMode::none;
    std::vector<int> meshes = {24, 48};  // mesh sizes for convergence studies
    std::uint64_t seed = 12345;
    int threads = 0;  // 0 keeps the OpenMP default
    GasModel gas;
    LimiterConfig limiter;

    double effective_cfl() const { return cfl > 0.0 ? cfl : (order == 2 ? 0.6 : 0.4); }
    void validate() const;
};

// Per-variable L1 (mean absolute) and Linf norms of the active-zone
// difference between two skinny fields.
struct ErrorReport {
    std::array<double, NVAR> l1 = {};
    std::array<double, NVAR> linf = {};
    double order_estimate = std::numeric_limits<double>::quiet_NaN();
};

ErrorReport error_norms(const SkinnyState& numerical, const SkinnyState& exact,
                        const PatchGeometry& g);

struct RunResult {
    SkinnyState final_state;  // gathered global active zones (+ ghosts)
    PatchGeometry geom;
    std::int64_t steps = 0;
    double t_end = 0.0;
    double wall_seconds = 0.0;
    double zones_per_sec = 0.0;
    StageProfile profile;
    TransferLedger ledger;
    std::uint64_t riemann_calls = 0;
    std::optional<ErrorReport> errors;  // vs exact solution, when one exists
};

// Runs one configured problem to t_final or for a fixed step count, with
// dt carried forward through the dt/dt_next handoff (first dt from the
// initial condition, last step clipped to land exactly on t_final).
RunResult run_simulation(const RunConfig& cfg);

struct ConvergenceRow {
    int mesh = 0;
    ErrorReport report;
    RunResult result;
};
std::vector<ConvergenceRow> run_convergence_study(const RunConfig& cfg,
                                                  const std::vector<int>& meshes);

RunResult run_benchmark(const RunConfig& cfg);

struct ReproReport {
    bool serial_bit_identical = false;
    double multiworker_l1_diff = 0.0;   // density L1 between 1-worker and N-worker runs
    double max_abs_diff = 0.0;
    std::array<int, 3> max_diff_zone = {0, 0, 0};
    bool pass = false;
};
ReproReport run_reproducibility_check(const RunConfig& cfg);

// CSV output: every row echoes the full RunConfig so results are
// self-describing. Column list documented in the README.
std::string csv_header();
std::string csv_row(const RunConfig& cfg, const RunResult& result, int mesh_override = 0);
void append_csv(const std::string& path, const std::string& header, const std::string& rows);

// Plain key=value config files; every CLI flag overrides the file.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

std::string to_string(Problem p);
std::string to_string(IntegratorChoice i);
std::string to_string(SolverChoice s);
std::string to_string(TransferStrategy s);
Problem problem_from_string(const std::string& s);
IntegratorChoice integrator_from_string(const std::string& s);
SolverChoice solver_from_string(const std::string& s);
TransferStrategy strategy_from_string(const std::string& s);

}  // namespace hydro
