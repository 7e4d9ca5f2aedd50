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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vesopt/csv.hpp"
#include "vesopt/error.hpp"
#include "vesopt/rng.hpp"

namespace vesopt::cli {
namespace {

using nlohmann::json;

struct Flags {
  std::optional<std::string> config;
  std::vector<std::string> objective;
  std::vector<std::string> acq;
  std::optional<int> steps;
  std::optional<int> repeats;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> grid;
  std::optional<int> paths;
  std::optional<int> init_points;
  std::optional<std::string> out;
  std::optional<std::string> sampler;
  std::optional<std::string> path_grid;
  std::optional<bool> standardize;
  std::optional<int> jobs;
  std::optional<int> ves_iters;
  std::optional<std::string> ves_init;
  bool resample = false;
  std::optional<std::string> data;
  std::vector<double> x;
  bool ves_trace = false;
};

struct App {
  CLI::App app{"Bayesian optimization with variational entropy search", "vesopt"};
  Flags flags;
  std::optional<Subcommand> command;

  App() {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", flags.config, "JSON config file (snake_case ExperimentConfig fields)");
    app.add_option("--objective", flags.objective, "Objective names, comma separated, or 'all'")
        ->delimiter(',');
    app.add_option("--acq", flags.acq, "Acquisitions: ei, mes, ves-gamma, ves-exp, random")
        ->delimiter(',');
    app.add_option("--steps", flags.steps, "BO steps after the initial design");
    app.add_option("--repeats", flags.repeats, "Independent runs; run r uses seed + r");
    app.add_option("--seed", flags.seed, "Base seed");
    app.add_option("--grid", flags.grid, "Candidate grid resolution, e.g. 101x101");
    app.add_option("--paths", flags.paths, "Posterior path samples per step");
    app.add_option("--init-points", flags.init_points, "Uniform random initial observations");
    app.add_option("--out", flags.out, "Output directory");
    app.add_option("--sampler", flags.sampler, "Path sampler: exact|coarse");
    app.add_option("--path-grid", flags.path_grid, "Coarse sampler path grid, e.g. 41x41");
    app.add_option("--standardize", flags.standardize, "Standardize observations: true|false");
    app.add_option("--jobs", flags.jobs, "Worker threads across repeats");
    app.add_option("--ves-iters", flags.ves_iters, "Maximum VES coordinate-ascent iterations");
    app.add_option("--ves-init", flags.ves_init, "VES starting node: ei|random");
    app.add_flag("--resample", flags.resample, "Redraw paths at every VES iteration");
    app.add_option("--data", flags.data, "dump-acq/dump-samples: CSV snapshot with header x1,..,xd,y");
    app.add_option("--x", flags.x, "dump-samples: query point, comma separated")->delimiter(',');
    app.add_flag("--ves-trace", flags.ves_trace, "run: also write per-step VES diagnostics as JSONL");

    const auto sub = [this](const char* name, const char* help, Subcommand c) {
      app.add_subcommand(name, help)->callback([this, c] { command = c; });
    };
    sub("run", "Single BO run per objective and acquisition", Subcommand::run);
    sub("bench", "Repeated runs with per-step aggregate regret", Subcommand::bench);
    sub("dump-acq", "Acquisition field over the grid for a data snapshot", Subcommand::dump_acq);
    sub("dump-samples", "(y*, y_x) path-sample pairs at a query point", Subcommand::dump_samples);
    sub("list-objectives", "Registered objectives with domains and optima",
        Subcommand::list_objectives);
  }
};

template <class T>
T get_field(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ConfigError(key, "has the wrong type");
  }
}

std::vector<std::string> string_list(const json& j, const std::string& key) {
  if (j.is_string()) return {j.get<std::string>()};
  return get_field<std::vector<std::string>>(j, key);
}

std::vector<int> resolution_field(const json& j, const std::string& key) {
  if (j.is_string()) return parse_resolution(j.get<std::string>(), key);
  return get_field<std::vector<int>>(j, key);
}

std::vector<Acquisition> parse_acquisitions(const std::vector<std::string>& names) {
  std::vector<Acquisition> out;
  for (const std::string& n : names) {
    const auto a = parse_acquisition(n);
    if (!a) throw ConfigError("acquisition", "unknown acquisition '" + n + "'");
    out.push_back(*a);
  }
  if (out.empty()) throw ConfigError("acquisition", "must name at least one acquisition");
  return out;
}

SamplerMode sampler_value(const std::string& s) {
  const auto m = parse_sampler(s);
  if (!m) throw ConfigError("sampler", "expected exact or coarse, got '" + s + "'");
  return *m;
}

InitMode ves_init_value(const std::string& s) {
  const auto m = parse_init_mode(s);
  if (!m) throw ConfigError("ves_init", "expected ei or random, got '" + s + "'");
  return *m;
}

std::string resolution_text(const std::vector<int>& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "x" : "") + std::to_string(r[i]);
  return s;
}

Invocation resolve(const App& a) {
  const Flags& f = a.flags;
  Invocation inv;
  inv.command = a.command.value_or(Subcommand::bench);
  if (f.config) {
    inv.config_path = *f.config;
    std::ifstream in(*f.config);
    if (!in) throw IoError("cannot read config file " + *f.config);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    apply_config_json(j, inv);
  }
  ExperimentConfig& c = inv.config;
  if (!f.objective.empty()) inv.objectives = f.objective;
  if (!f.acq.empty()) inv.acquisitions = parse_acquisitions(f.acq);
  if (f.steps) c.steps = *f.steps;
  if (f.repeats) c.repeats = *f.repeats;
  if (f.seed) c.seed = *f.seed;
  if (f.grid) c.grid = parse_resolution(*f.grid, "grid");
  if (f.paths) c.paths = *f.paths;
  if (f.init_points) c.init_points = *f.init_points;
  if (f.out) inv.out = *f.out;
  if (f.sampler) c.sampler = sampler_value(*f.sampler);
  if (f.path_grid) c.path_grid = parse_resolution(*f.path_grid, "path_grid");
  if (f.standardize) c.standardize = *f.standardize;
  if (f.jobs) c.jobs = *f.jobs;
  if (f.ves_iters) c.ves_max_iters = *f.ves_iters;
  if (f.ves_init) c.ves_init = ves_init_value(*f.ves_init);
  if (f.resample) c.resample_per_iter = true;
  if (f.data) inv.data_path = *f.data;
  if (!f.x.empty()) inv.x = f.x;
  inv.ves_trace = f.ves_trace;

  if (inv.objectives.size() == 1 && inv.objectives[0] == "all") {
    inv.objectives.clear();
    for (const Objective& o : objective_registry()) inv.objectives.push_back(o.name);
  }
  if (inv.objectives.empty()) throw ConfigError("objective", "must name at least one objective");
  for (const std::string& name : inv.objectives) {
    if (!find_objective(name)) throw ConfigError("objective", "unknown objective '" + name + "'");
  }
  c.objective = inv.objectives.front();
  c.acquisition = inv.acquisitions.front();
  c.validate();

  const bool single = inv.command == Subcommand::dump_acq || inv.command == Subcommand::dump_samples;
  if (single && inv.objectives.size() != 1) {
    throw ConfigError("objective", "dump commands take a single objective");
  }
  if (inv.command == Subcommand::dump_samples && !inv.x) {
    throw ConfigError("x", "dump-samples requires --x");
  }
  return inv;
}

Objective resolved_objective(const Invocation& inv, const std::string& name) {
  Objective obj = *find_objective(name);
  if (inv.config.domain) obj.domain = *inv.config.domain;
  if (obj.dimension() != static_cast<int>(inv.config.grid.size())) {
    throw ConfigError("grid", "dimension differs from objective " + name);
  }
  return obj;
}

Dataset read_snapshot(const std::filesystem::path& path, int dim) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read data file " + path.string());
  std::string line;
  std::getline(in, line);
  Dataset data(dim);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        cells.push_back(std::stod(cell, &used));
      } catch (const std::exception&) {
        throw ConfigError("data", "line " + std::to_string(lineno) + ": not a number");
      }
    }
    if (static_cast<int>(cells.size()) != dim + 1) {
      throw ConfigError("data", "line " + std::to_string(lineno) + ": expected " +
                                    std::to_string(dim + 1) + " columns");
    }
    data.add(Eigen::Map<const Vector>(cells.data(), dim), cells.back());
  }
  if (data.empty()) throw ConfigError("data", "snapshot has no observations");
  return data;
}

Dataset snapshot(const Invocation& inv, const Objective& obj) {
  if (inv.data_path) return read_snapshot(*inv.data_path, obj.dimension());
  return initial_design(obj, inv.config.init_points, inv.config.seed);
}

std::filesystem::path prepare_out(const Invocation& inv) {
  std::error_code ec;
  std::filesystem::create_directories(inv.out, ec);
  if (ec) throw IoError("cannot create output directory " + inv.out.string() + ": " + ec.message());
  write_file_atomic(inv.out / "config.json", config_to_json(inv).dump(2) + "\n");
  return inv.out;
}

std::string stem(const std::string& objective, Acquisition a) {
  return objective + "_" + std::string(acquisition_name(a));
}

int run_experiments(Invocation inv, std::ostream& out, std::ostream& err) {
  const bool single = inv.command == Subcommand::run;
  if (single) inv.config.repeats = 1;
  const auto dir = prepare_out(inv);
  int status = kExitOk;
  for (const std::string& name : inv.objectives) {
    const Objective obj = resolved_objective(inv, name);
    for (Acquisition a : inv.acquisitions) {
      ExperimentConfig cfg = inv.config;
      cfg.objective = name;
      cfg.acquisition = a;
      const auto t0 = std::chrono::steady_clock::now();
      const ExperimentResult result = run_experiment(obj, cfg);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

      write_file_atomic(dir / (stem(name, a) + "_runs.csv"), runs_csv(result));
      if (!single) write_file_atomic(dir / (stem(name, a) + "_aggregate.csv"), aggregate_csv(result));
      const auto& steps = result.runs.front().steps;
      if (single && inv.ves_trace && !steps.empty() && steps.front().ves) {
        write_file_atomic(dir / (stem(name, a) + "_ves_trace.jsonl"),
                          ves_trace_jsonl(result.runs.front()));
      }
      const double final_mean =
          result.aggregate.empty() ? std::nan("") : result.aggregate.back().mean_log_regret;
      std::ostringstream wall;
      wall << std::fixed << std::setprecision(1) << secs;
      out << name << ' ' << acquisition_name(a) << ": final mean log regret "
          << format_double(final_mean) << " (" << wall.str() << " s)\n";
      for (const RegretTrace& r : result.runs) {
        if (r.complete) continue;
        err << "error: " << name << ' ' << acquisition_name(a) << " run " << r.run
            << " stopped after " << r.steps.size() << " steps: " << r.error << '\n';
        status = kExitCompute;
      }
    }
  }
  return status;
}

int dump_acq(const Invocation& inv, std::ostream& out) {
  const auto dir = prepare_out(inv);
  const Objective obj = resolved_objective(inv, inv.objectives.front());
  const Dataset data = snapshot(inv, obj);
  const StepModel model = fit_step_model(data, inv.config.standardize);
  const SampleGrid grid = SampleGrid::regular(obj.domain, inv.config.grid);
  const SamplerPlan plan = make_sampler_plan(inv.config, obj.domain, grid);
  for (Acquisition a : inv.acquisitions) {
    ExperimentConfig cfg = inv.config;
    cfg.acquisition = a;
    const Selection sel = select_next(cfg, model, grid, plan, derive_seed(cfg.seed, 1));
    std::ostringstream csv;
    write_field_csv(csv, grid, sel.field);
    const auto path = dir / ("acq_" + std::string(acquisition_name(a)) + ".csv");
    write_file_atomic(path, csv.str());
    out << path.string() << ": argmax node " << sel.index << '\n';
  }
  return kExitOk;
}

int dump_samples(const Invocation& inv, std::ostream& out) {
  const Objective obj = resolved_objective(inv, inv.objectives.front());
  if (static_cast<int>(inv.x->size()) != obj.dimension()) {
    throw ConfigError("x", "expected " + std::to_string(obj.dimension()) + " coordinates");
  }
  const Vector x = Eigen::Map<const Vector>(inv.x->data(), obj.dimension());
  if (!obj.domain.contains(x)) throw ConfigError("x", "lies outside the objective domain");
  const auto dir = prepare_out(inv);
  const Dataset data = snapshot(inv, obj);
  const StepModel model = fit_step_model(data, inv.config.standardize);
  const SampleGrid grid = SampleGrid::regular(
      obj.domain, inv.config.sampler == SamplerMode::coarse ? inv.config.path_grid : inv.config.grid);
  write_file_atomic(dir / "samples.csv",
                    sample_pairs_csv(model, grid, x, inv.config.paths, derive_seed(inv.config.seed, 1)));
  out << (dir / "samples.csv").string() << '\n';
  return kExitOk;
}

int list_objectives(std::ostream& out) {
  for (const Objective& o : objective_registry()) {
    out << o.name << " domain=";
    for (int d = 0; d < o.dimension(); ++d) {
      const auto k = static_cast<std::size_t>(d);
      out << (d ? "x" : "") << '[' << format_double(o.domain.lo[k]) << ','
          << format_double(o.domain.hi[k]) << ']';
    }
    out << " f_star=" << format_double(o.f_star) << '\n';
  }
  return kExitOk;
}

}  // namespace

std::vector<int> parse_resolution(const std::string& text, const std::string& field) {
  std::vector<int> r;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) {
      throw ConfigError(field, "expected a resolution like 101x101, got '" + text + "'");
    }
    r.push_back(v);
  }
  if (r.empty()) throw ConfigError(field, "expected a resolution like 101x101");
  return r;
}

void apply_config_json(const json& j, Invocation& inv) {
  if (!j.is_object()) throw ConfigError("config", "top level must be a JSON object");
  ExperimentConfig& c = inv.config;
  for (const auto& [key, v] : j.items()) {
    if (key == "objective") {
      inv.objectives = string_list(v, key);
    } else if (key == "acquisition") {
      inv.acquisitions = parse_acquisitions(string_list(v, key));
    } else if (key == "steps") {
      c.steps = get_field<int>(v, key);
    } else if (key == "repeats") {
      c.repeats = get_field<int>(v, key);
    } else if (key == "seed") {
      c.seed = get_field<std::uint64_t>(v, key);
    } else if (key == "grid") {
      c.grid = resolution_field(v, key);
    } else if (key == "paths") {
      c.paths = get_field<int>(v, key);
    } else if (key == "init_points") {
      c.init_points = get_field<int>(v, key);
    } else if (key == "standardize") {
      c.standardize = get_field<bool>(v, key);
    } else if (key == "sampler") {
      c.sampler = sampler_value(get_field<std::string>(v, key));
    } else if (key == "path_grid") {
      c.path_grid = resolution_field(v, key);
    } else if (key == "ves_max_iters") {
      c.ves_max_iters = get_field<int>(v, key);
    } else if (key == "ves_init") {
      c.ves_init = ves_init_value(get_field<std::string>(v, key));
    } else if (key == "resample_per_iter") {
      c.resample_per_iter = get_field<bool>(v, key);
    } else if (key == "clamp_eps") {
      c.clamp_eps = get_field<double>(v, key);
    } else if (key == "jobs") {
      c.jobs = get_field<int>(v, key);
    } else if (key == "domain") {
      if (v.is_null()) {
        c.domain.reset();
      } else {
        if (!v.is_object() || !v.contains("lo") || !v.contains("hi")) {
          throw ConfigError(key, "expected {\"lo\": [...], \"hi\": [...]}");
        }
        c.domain = Box{get_field<std::vector<double>>(v["lo"], key),
                       get_field<std::vector<double>>(v["hi"], key)};
      }
    } else if (key == "out") {
      inv.out = get_field<std::string>(v, key);
    } else {
      throw ConfigError(key, "unknown config field");
    }
  }
}

json config_to_json(const Invocation& inv) {
  const ExperimentConfig& c = inv.config;
  json acqs = json::array();
  for (Acquisition a : inv.acquisitions) acqs.push_back(std::string(acquisition_name(a)));
  json j = {
      {"objective", inv.objectives},
      {"acquisition", acqs},
      {"steps", c.steps},
      {"repeats", c.repeats},
      {"seed", c.seed},
      {"grid", resolution_text(c.grid)},
      {"paths", c.paths},
      {"init_points", c.init_points},
      {"standardize", c.standardize},
      {"sampler", std::string(sampler_name(c.sampler))},
      {"path_grid", resolution_text(c.path_grid)},
      {"ves_max_iters", c.ves_max_iters},
      {"ves_init", std::string(init_mode_name(c.ves_init))},
      {"resample_per_iter", c.resample_per_iter},
      {"clamp_eps", c.clamp_eps},
      {"jobs", c.jobs},
  };
  j["domain"] = c.domain ? json{{"lo", c.domain->lo}, {"hi", c.domain->hi}} : json(nullptr);
  return j;
}

Invocation parse(int argc, const char* const* argv) {
  App a;
  a.app.parse(argc, argv);
  return resolve(a);
}

int execute(const Invocation& inv, std::ostream& out, std::ostream& err) {
  switch (inv.command) {
    case Subcommand::run:
    case Subcommand::bench:
      return run_experiments(inv, out, err);
    case Subcommand::dump_acq:
      return dump_acq(inv, out);
    case Subcommand::dump_samples:
      return dump_samples(inv, out);
    case Subcommand::list_objectives:
      return list_objectives(out);
  }
  return kExitUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  App a;
  Invocation inv;
  try {
    a.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = a.app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    inv = resolve(a);
    return execute(inv, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCompute;
  }
}

}  // namespace vesopt::cli
