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

#include "vesopt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "vesopt/acquisition.hpp"
#include "vesopt/csv.hpp"
#include "vesopt/error.hpp"
#include "vesopt/rng.hpp"

namespace vesopt {

std::string_view acquisition_name(Acquisition a) {
  switch (a) {
    case Acquisition::ei: return "ei";
    case Acquisition::mes: return "mes";
    case Acquisition::ves_gamma: return "ves-gamma";
    case Acquisition::ves_exp: return "ves-exp";
    case Acquisition::random: return "random";
  }
  return "unknown";
}

std::optional<Acquisition> parse_acquisition(std::string_view s) {
  std::string norm(s);
  std::replace(norm.begin(), norm.end(), '_', '-');
  for (Acquisition a : {Acquisition::ei, Acquisition::mes, Acquisition::ves_gamma,
                        Acquisition::ves_exp, Acquisition::random}) {
    if (norm == acquisition_name(a)) return a;
  }
  return std::nullopt;
}

std::string_view sampler_name(SamplerMode m) {
  return m == SamplerMode::exact ? "exact" : "coarse";
}

std::optional<SamplerMode> parse_sampler(std::string_view s) {
  if (s == "exact") return SamplerMode::exact;
  if (s == "coarse") return SamplerMode::coarse;
  return std::nullopt;
}

std::string_view init_mode_name(InitMode m) { return m == InitMode::ei ? "ei" : "random"; }

std::optional<InitMode> parse_init_mode(std::string_view s) {
  if (s == "ei") return InitMode::ei;
  if (s == "random") return InitMode::random;
  return std::nullopt;
}

double log_regret(double best_y, double f_star) {
  const double gap = f_star - best_y;
  if (gap < -1e-12) {
    throw InvalidFStarError("log_regret: observed value exceeds f_star");
  }
  if (gap <= std::exp(kLogRegretFloor)) return kLogRegretFloor;
  return std::max(std::log(gap), kLogRegretFloor);
}

void ExperimentConfig::validate() const {
  if (objective.empty()) throw ConfigError("objective", "must name an objective");
  if (steps < 1) throw ConfigError("steps", "must be at least 1");
  if (repeats < 1) throw ConfigError("repeats", "must be at least 1");
  if (init_points < 1) throw ConfigError("init_points", "must be at least 1");
  if (paths < 2) throw ConfigError("paths", "must be at least 2");
  if (grid.empty()) throw ConfigError("grid", "must list a node count per dimension");
  for (int r : grid) {
    if (r < 2) throw ConfigError("grid", "needs at least 2 nodes per axis");
  }
  if (sampler == SamplerMode::coarse) {
    if (path_grid.size() != grid.size()) {
      throw ConfigError("path_grid", "must have the same dimension as grid");
    }
    for (int r : path_grid) {
      if (r < 2) throw ConfigError("path_grid", "needs at least 2 nodes per axis");
    }
  }
  if (ves_max_iters < 1) throw ConfigError("ves_max_iters", "must be at least 1");
  if (!(clamp_eps > 0.0)) throw ConfigError("clamp_eps", "must be positive");
  if (jobs < 1) throw ConfigError("jobs", "must be at least 1");
  if (domain) domain->validate();
}

VesConfig ExperimentConfig::ves_config() const {
  VesConfig v;
  v.max_iters = ves_max_iters;
  v.paths = paths;
  v.clamp_eps = clamp_eps;
  v.resample_per_iter = resample_per_iter;
  v.init = ves_init;
  v.family = acquisition == Acquisition::ves_exp ? VariationalFamily::exponential
                                                 : VariationalFamily::gamma;
  return v;
}

Dataset initial_design(const Objective& objective, int init_points, std::uint64_t seed) {
  Dataset data(objective.dimension());
  Rng rng = make_rng(seed, kInitStream);
  for (int i = 0; i < init_points; ++i) {
    Vector x(objective.dimension());
    for (int d = 0; d < objective.dimension(); ++d) {
      const auto k = static_cast<std::size_t>(d);
      x(d) = std::uniform_real_distribution<double>(objective.domain.lo[k], objective.domain.hi[k])(rng);
    }
    data.add(x, objective(x));
  }
  return data;
}

StepModel fit_step_model(const Dataset& data, bool standardize) {
  const Standardizer scaler = standardize ? Standardizer::fit(data.values) : Standardizer{};
  Dataset model_data = scaler.apply(data);
  const KernelParams params = fit_hyperparameters(model_data);
  const double incumbent = model_data.incumbent();
  return StepModel{scaler, GpPosterior(std::move(model_data), params), incumbent};
}

SamplerPlan make_sampler_plan(const ExperimentConfig& cfg, const Box& domain, const SampleGrid& grid) {
  if (cfg.sampler == SamplerMode::exact) return SamplerPlan::exact();
  return SamplerPlan::coarse(grid, SampleGrid::regular(domain, cfg.path_grid));
}

Selection select_next(const ExperimentConfig& cfg, const StepModel& model, const SampleGrid& grid,
                      const SamplerPlan& plan, std::uint64_t step_seed, const CandidateMask& mask) {
  Selection s;
  switch (cfg.acquisition) {
    case Acquisition::ei:
      s.field = ei_field(model.gp, grid, model.incumbent, mask);
      break;
    case Acquisition::mes: {
      const PathBatch batch = draw_path_batch(model.gp, grid, plan, cfg.paths, step_seed);
      const Vector& ystar = batch.path_max();
      s.field = mes_field(model.gp, grid,
                          std::span<const double>(ystar.data(), static_cast<std::size_t>(ystar.size())),
                          mask);
      break;
    }
    case Acquisition::ves_gamma:
    case Acquisition::ves_exp: {
      VesResult r = ves_select(model.gp, grid, model.incumbent, cfg.ves_config(), step_seed, plan, mask);
      s.ves = VesStepSummary{r.iterations_used, r.converged, r.k_final, r.beta_final, r.field.max_value()};
      s.field = std::move(r.field);
      s.index = r.x_index;
      return s;
    }
    case Acquisition::random: {
      Rng rng = make_rng(step_seed, kRandomAcqStream);
      std::uniform_real_distribution<double> u(0.0, 1.0);
      std::vector<double> v(static_cast<std::size_t>(grid.size()));
      for (double& x : v) x = u(rng);
      s.field = AcquisitionField(std::move(v), mask);
      break;
    }
  }
  s.index = s.field.argmax_index;
  return s;
}

std::string sample_pairs_csv(const StepModel& model, const SampleGrid& grid,
                             const Eigen::Ref<const Vector>& x, int num_paths, std::uint64_t seed) {
  const SampleGrid nodes = grid.with_appended(x.transpose());
  const PathBatch batch = draw_path_batch(model.gp, nodes, SamplerPlan::exact(), num_paths, seed);
  const Matrix original =
      (batch.values().array() * model.scaler.scale + model.scaler.offset).matrix();
  std::ostringstream out;
  write_sample_pairs_csv(out, PathBatch::from_values(original, seed), nodes.size() - 1);
  return out.str();
}

RegretTrace run_bo(const Objective& objective, const ExperimentConfig& cfg, std::uint64_t seed,
                   int run_index) {
  cfg.validate();
  Objective obj = objective;
  if (cfg.domain) obj.domain = *cfg.domain;
  if (static_cast<int>(cfg.grid.size()) != obj.dimension()) {
    throw ConfigError("grid", "dimension differs from the objective");
  }

  RegretTrace trace;
  trace.acquisition = cfg.acquisition;
  trace.run = run_index;
  trace.seed = seed;

  const SampleGrid grid = SampleGrid::regular(obj.domain, cfg.grid);
  const SamplerPlan plan = make_sampler_plan(cfg, obj.domain, grid);
  CandidateMask mask(static_cast<std::size_t>(grid.size()), true);

  Dataset data(obj.dimension());
  double best_y = -std::numeric_limits<double>::infinity();
  const auto record = [&](int t, const Vector& x, double y) {
    data.add(x, y);
    best_y = std::max(best_y, y);
    return TraceStep{t, x, y, best_y, log_regret(best_y, obj.f_star), std::nullopt};
  };

  try {
    const Dataset init = initial_design(obj, cfg.init_points, seed);
    for (Index i = 0; i < init.size(); ++i) {
      trace.initial.push_back(record(0, init.points.row(i).transpose(), init.values(i)));
    }

    for (int t = 1; t <= cfg.steps; ++t) {
      const StepModel model = fit_step_model(data, cfg.standardize);
      const Selection sel = select_next(cfg, model, grid, plan,
                                        derive_seed(seed, static_cast<std::uint64_t>(t)), mask);
      if (sel.index < 0) throw Error("run_bo: every grid node has been evaluated");
      mask[static_cast<std::size_t>(sel.index)] = false;
      const Vector x = grid.point(sel.index);
      TraceStep step = record(t, x, obj(x));
      step.ves = sel.ves;
      trace.steps.push_back(std::move(step));
    }
  } catch (const Error& e) {
    trace.complete = false;
    trace.error = e.what();
  }
  return trace;
}

bool ExperimentResult::complete() const {
  return std::all_of(runs.begin(), runs.end(), [](const RegretTrace& r) { return r.complete; });
}

std::vector<AggregateRow> aggregate_traces(std::span<const RegretTrace> runs, int steps) {
  std::vector<AggregateRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int t = 1; t <= steps; ++t) {
    double sum = 0.0, sum_sq = 0.0;
    int n = 0;
    for (const RegretTrace& r : runs) {
      if (static_cast<int>(r.steps.size()) < t) continue;
      const double v = r.steps[static_cast<std::size_t>(t - 1)].log_regret;
      sum += v;
      ++n;
    }
    const double mean = n > 0 ? sum / n : std::numeric_limits<double>::quiet_NaN();
    for (const RegretTrace& r : runs) {
      if (static_cast<int>(r.steps.size()) < t) continue;
      const double dv = r.steps[static_cast<std::size_t>(t - 1)].log_regret - mean;
      sum_sq += dv * dv;
    }
    const double sd = n > 0 ? std::sqrt(sum_sq / n) : std::numeric_limits<double>::quiet_NaN();
    rows.push_back({t, mean, sd});
  }
  return rows;
}

ExperimentResult run_experiment(const Objective& objective, const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  result.objective = objective.name;
  result.acquisition = cfg.acquisition;
  result.runs.resize(static_cast<std::size_t>(cfg.repeats));

  std::atomic<int> next{0};
  const auto worker = [&] {
    for (int r = next++; r < cfg.repeats; r = next++) {
      result.runs[static_cast<std::size_t>(r)] =
          run_bo(objective, cfg, cfg.seed + static_cast<std::uint64_t>(r), r);
    }
  };
  const int workers = std::min(cfg.jobs, cfg.repeats);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  result.aggregate = aggregate_traces(result.runs, cfg.steps);
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const auto obj = find_objective(cfg.objective);
  if (!obj) throw ConfigError("objective", "unknown objective '" + cfg.objective + "'");
  return run_experiment(*obj, cfg);
}

namespace {

void append_row(std::ostringstream& out, std::string_view acq, int run, const TraceStep& s) {
  if (s.x.size() > 2) throw Error("runs_csv: only 1-D and 2-D inputs fit the results schema");
  out << acq << ',' << run << ',' << s.t << ',' << format_double(s.x(0)) << ',';
  if (s.x.size() == 2) out << format_double(s.x(1));
  out << ',' << format_double(s.y) << ',' << format_double(s.best_y) << ','
      << format_double(s.log_regret) << '\n';
}

}  // namespace

std::string runs_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << kRunsCsvHeader << '\n';
  const std::string_view acq = acquisition_name(result.acquisition);
  for (const RegretTrace& r : result.runs) {
    for (const TraceStep& s : r.initial) append_row(out, acq, r.run, s);
    for (const TraceStep& s : r.steps) append_row(out, acq, r.run, s);
  }
  return out.str();
}

std::string aggregate_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << kAggregateCsvHeader << '\n';
  const std::string_view acq = acquisition_name(result.acquisition);
  for (const AggregateRow& row : result.aggregate) {
    out << acq << ',' << row.step << ',' << format_double(row.mean_log_regret) << ','
        << format_double(row.std_log_regret) << '\n';
  }
  return out.str();
}

std::string ves_trace_jsonl(const RegretTrace& trace) {
  std::ostringstream out;
  for (const TraceStep& s : trace.steps) {
    if (!s.ves) continue;
    out << "{\"step\":" << s.t << ",\"iterations\":" << s.ves->iterations
        << ",\"k\":" << format_double(s.ves->k) << ",\"beta\":" << format_double(s.ves->beta)
        << ",\"x_selected\":[";
    for (Index i = 0; i < s.x.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(s.x(i));
    }
    out << "],\"eslb_max\":" << format_double(s.ves->eslb_max) << "}\n";
  }
  return out.str();
}

}  // namespace vesopt
