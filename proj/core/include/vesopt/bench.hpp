// Copyright 2026 The vesopt Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// =============================================================================

#ifndef VESOPT_BENCH_HPP
#define VESOPT_BENCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vesopt/acquisition.hpp"
#include "vesopt/gp.hpp"
#include "vesopt/grid.hpp"
#include "vesopt/objectives.hpp"
#include "vesopt/ves.hpp"

namespace vesopt {

enum class Acquisition { ei, mes, ves_gamma, ves_exp, random };

// "ei", "mes", "ves-gamma", "ves-exp", "random".
std::string_view acquisition_name(Acquisition a);
// Accepts the names above with '-' or '_'.
std::optional<Acquisition> parse_acquisition(std::string_view s);
std::string_view sampler_name(SamplerMode m);
std::optional<SamplerMode> parse_sampler(std::string_view s);
std::string_view init_mode_name(InitMode m);
std::optional<InitMode> parse_init_mode(std::string_view s);

inline constexpr double kLogRegretFloor = -16.0;

/// log(f_star - best_y), floored at -16 once the gap is at or below e^-16.
/// Throws InvalidFStarError when best_y exceeds f_star by more than 1e-12.
double log_regret(double best_y, double f_star);

struct ExperimentConfig {
  std::string objective = "himmelblau";
  Acquisition acquisition = Acquisition::ei;
  int steps = 50;
  int repeats = 10;
  std::vector<int> grid = {101, 101};
  int paths = 1024;
  int init_points = 2;
  std::uint64_t seed = 0;
  bool standardize = true;
  SamplerMode sampler = SamplerMode::coarse;
  std::vector<int> path_grid = {41, 41};
  int ves_max_iters = 10;
  InitMode ves_init = InitMode::ei;
  bool resample_per_iter = false;
  double clamp_eps = kDefaultClampEps;
  int jobs = 1;
  // Overrides the objective's registered domain when set.
  std::optional<Box> domain;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
  VesConfig ves_config() const;
};

struct VesStepSummary {
  int iterations = 0;
  bool converged = false;
  double k = 1.0;
  double beta = 1.0;
  double eslb_max = 0.0;
};

struct TraceStep {
  int t = 0;
  Vector x;
  double y = 0.0;
  double best_y = 0.0;
  double log_regret = 0.0;
  std::optional<VesStepSummary> ves;
};

/// One BO run. initial holds the random design (t = 0), steps the T
/// acquisition-driven evaluations.
struct RegretTrace {
  Acquisition acquisition = Acquisition::ei;
  int run = 0;
  std::uint64_t seed = 0;
  std::vector<TraceStep> initial;
  std::vector<TraceStep> steps;
  bool complete = true;
  std::string error;
};

/// Runs init_points uniform evaluations and then cfg.steps BO iterations:
/// standardize, fit hyperparameters by maximum likelihood, fit the
/// posterior, maximize the acquisition over the grid (never re-selecting an
/// evaluated node) and evaluate the objective. A library error aborts the
/// run and returns the partial trace with complete = false.
/// init_points uniform draws in the objective's domain, evaluated.
Dataset initial_design(const Objective& objective, int init_points, std::uint64_t seed);

/// Posterior on (optionally) standardized observations.
struct StepModel {
  Standardizer scaler;
  GpPosterior gp;
  double incumbent;
};

StepModel fit_step_model(const Dataset& data, bool standardize);

struct Selection {
  Index index = -1;
  AcquisitionField field;
  std::optional<VesStepSummary> ves;
};

/// Evaluates the configured acquisition over grid and picks the masked argmax.
/// The random baseline scores nodes with uniform draws.
Selection select_next(const ExperimentConfig& cfg, const StepModel& model, const SampleGrid& grid,
                      const SamplerPlan& plan, std::uint64_t step_seed,
                      const CandidateMask& mask = {});

/// SamplerPlan implied by cfg for the candidate grid.
SamplerPlan make_sampler_plan(const ExperimentConfig& cfg, const Box& domain, const SampleGrid& grid);

/// (y*, y_x) pairs in original units for query x, from paths drawn jointly
/// over grid, x and the training inputs.
std::string sample_pairs_csv(const StepModel& model, const SampleGrid& grid,
                             const Eigen::Ref<const Vector>& x, int num_paths, std::uint64_t seed);

RegretTrace run_bo(const Objective& objective, const ExperimentConfig& cfg, std::uint64_t seed,
                   int run_index = 0);

struct AggregateRow {
  int step = 0;
  double mean_log_regret = 0.0;
  double std_log_regret = 0.0;
};

struct ExperimentResult {
  std::string objective;
  Acquisition acquisition = Acquisition::ei;
  std::vector<RegretTrace> runs;
  std::vector<AggregateRow> aggregate;

  bool complete() const;
};

/// Per-step mean and population standard deviation of log regret over the
/// runs that reached the step.
std::vector<AggregateRow> aggregate_traces(std::span<const RegretTrace> runs, int steps);

/// cfg.repeats runs with seeds seed + run_index, up to cfg.jobs at a time.
/// Output does not depend on jobs.
ExperimentResult run_experiment(const Objective& objective, const ExperimentConfig& cfg);
/// Looks cfg.objective up in the registry.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

inline constexpr std::string_view kRunsCsvHeader =
    "acquisition,run,step,x1,x2,y,best_y,log_regret";
inline constexpr std::string_view kAggregateCsvHeader =
    "acquisition,step,mean_log_regret,std_log_regret";

/// Rows for the initial design (step 0) and every BO step of every run.
/// Supports objectives of dimension 1 or 2; x2 is empty in 1-D.
std::string runs_csv(const ExperimentResult& result);
std::string aggregate_csv(const ExperimentResult& result);

/// One JSON object per BO step of a VES run:
/// {"step", "iterations", "k", "beta", "x_selected", "eslb_max"}.
std::string ves_trace_jsonl(const RegretTrace& trace);

}  // namespace vesopt

#endif  // VESOPT_BENCH_HPP
