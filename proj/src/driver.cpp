#include "sbpmhd/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "sbpmhd/error.hpp"
#include "sbpmhd/io.hpp"

#ifndef SBPMHD_VERSION
#define SBPMHD_VERSION "unknown"
#endif

namespace sbpmhd {

const char* version_string() { return SBPMHD_VERSION; }

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size() || !std::isfinite(x))
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  return x;
}

int parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  int x = 0;
  try {
    x = std::stoi(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw ConfigError(key + ": expected an integer, got '" + v + "'");
  return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "off" || v == "no") return false;
  throw ConfigError(key + ": expected true/false, got '" + v + "'");
}

template <class F>
auto as_config_error(F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

std::string join_problems() {
  std::string s;
  for (const auto& p : problem_names()) s += (s.empty() ? "" : ", ") + p;
  return s;
}

}  // namespace

SliceRequest parse_slice(std::string_view text) {
  const std::string t = trim(text);
  const auto eq = t.find('=');
  if (eq == std::string::npos) throw ConfigError("slice: expected x=<coord> or y=<coord>, got '" + t + "'");
  const std::string axis = trim(t.substr(0, eq));
  SliceRequest s;
  if (axis == "x") s.axis = 0;
  else if (axis == "y") s.axis = 1;
  else throw ConfigError("slice: axis must be x or y, got '" + axis + "'");
  s.coord = parse_double("slice", trim(t.substr(eq + 1)));
  return s;
}

std::string to_string(const SliceRequest& s) {
  return std::string(s.axis == 0 ? "x=" : "y=") + format_double(s.coord);
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "problem",     "scheme",      "dof",         "volume-flux",     "limiter",
      "blend",       "loehner-eps", "idp-density", "idp-entropy",     "idp-entropy-scope",
      "dt",          "t-end",       "c-h",         "output-dir",      "output-interval",
      "diag-interval", "slice"};
  return keys;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "problem") {
    cfg.problem = v;
  } else if (key == "scheme") {
    cfg.scheme = SchemeSpec::parse(v);
  } else if (key == "dof") {
    cfg.dof = parse_int(key, v);
  } else if (key == "volume-flux") {
    cfg.volume_flux = as_config_error([&] { return parse_volume_flux(v); });
  } else if (key == "limiter") {
    cfg.limiter = parse_limiter(v);
  } else if (key == "blend") {
    cfg.blend = as_config_error([&] { return parse_blend_mode(v); });
  } else if (key == "loehner-eps") {
    cfg.loehner_eps = parse_double(key, v);
  } else if (key == "idp-density") {
    cfg.idp_density = parse_bool(key, v);
  } else if (key == "idp-entropy") {
    cfg.idp_entropy = parse_bool(key, v);
  } else if (key == "idp-entropy-scope") {
    if (v == "all") cfg.idp_entropy_only_where_density_limited = false;
    else if (v == "density-limited") cfg.idp_entropy_only_where_density_limited = true;
    else throw ConfigError(key + ": expected all or density-limited, got '" + v + "'");
  } else if (key == "dt") {
    cfg.dt = parse_double(key, v);
  } else if (key == "t-end") {
    cfg.t_end = parse_double(key, v);
  } else if (key == "c-h") {
    cfg.c_h = parse_double(key, v);
  } else if (key == "output-dir") {
    cfg.output_dir = v;
  } else if (key == "output-interval") {
    cfg.output_interval = parse_double(key, v);
  } else if (key == "diag-interval") {
    cfg.diag_interval = parse_double(key, v);
  } else if (key == "slice") {
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!trim(item).empty()) cfg.slices.push_back(parse_slice(item));
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

ConfigEntries parse_config_text(const std::string& text) {
  ConfigEntries out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    out.emplace_back(key, trim(t.substr(eq + 1)));
  }
  return out;
}

ConfigEntries read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig make_run_config(const ConfigEntries& entries) {
  RunConfig cfg;
  for (const auto& [k, v] : entries) apply_config_entry(cfg, k, v);
  return cfg;
}

RunPlan validate(const RunConfig& cfg) {
  if (cfg.problem.empty())
    throw ConfigError("no problem given; valid problems: " + join_problems());
  RunPlan plan = configure_run(cfg.problem, cfg.scheme, cfg.dof);
  if (cfg.dt && !(*cfg.dt > 0.0)) throw ConfigError("dt must be positive");
  if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw ConfigError("t-end must be non-negative");
  if (cfg.c_h && !(*cfg.c_h >= 0.0)) throw ConfigError("c-h must be non-negative");
  if (!(cfg.diag_interval > 0.0)) throw ConfigError("diag-interval must be positive");
  if (!(cfg.output_interval >= 0.0)) throw ConfigError("output-interval must be non-negative");
  if (!(cfg.loehner_eps >= 0.0)) throw ConfigError("loehner-eps must be non-negative");
  if (cfg.limiter == LimiterKind::IDP && !cfg.idp_density && !cfg.idp_entropy)
    throw ConfigError("idp limiter needs idp-density or idp-entropy");
  EquationParams eq = plan.problem.eq;
  if (cfg.c_h) eq.c_h = *cfg.c_h;
  if (!volume_flux_available(cfg.volume_flux, eq))
    throw ConfigError(std::string("volume flux ") + std::string(to_string(cfg.volume_flux)) +
                      " is not available for these equation parameters");
  if (cfg.dt) plan.dt = *cfg.dt;
  if (cfg.t_end) plan.problem.t_end = *cfg.t_end;
  plan.problem.eq = eq;
  return plan;
}

ConfigEntries describe(const RunConfig& cfg) {
  ConfigEntries d;
  d.emplace_back("problem", cfg.problem);
  d.emplace_back("scheme", cfg.scheme.to_string());
  d.emplace_back("dof", std::to_string(cfg.dof));
  d.emplace_back("volume-flux", std::string(to_string(cfg.volume_flux)));
  d.emplace_back("limiter", std::string(to_string(cfg.limiter)));
  d.emplace_back("blend", std::string(to_string(cfg.blend)));
  d.emplace_back("loehner-eps", format_double(cfg.loehner_eps));
  d.emplace_back("idp-density", cfg.idp_density ? "true" : "false");
  d.emplace_back("idp-entropy", cfg.idp_entropy ? "true" : "false");
  d.emplace_back("idp-entropy-scope",
                 cfg.idp_entropy_only_where_density_limited ? "density-limited" : "all");
  d.emplace_back("dt", cfg.dt ? format_double(*cfg.dt) : "default");
  d.emplace_back("t-end", cfg.t_end ? format_double(*cfg.t_end) : "default");
  d.emplace_back("c-h", cfg.c_h ? format_double(*cfg.c_h) : "default");
  d.emplace_back("output-dir", cfg.output_dir);
  d.emplace_back("output-interval", format_double(cfg.output_interval));
  d.emplace_back("diag-interval", format_double(cfg.diag_interval));
  std::string s;
  for (const auto& r : cfg.slices) s += (s.empty() ? "" : ",") + to_string(r);
  d.emplace_back("slice", s);
  return d;
}

namespace {

class OutputWriter {
 public:
  OutputWriter(const RunConfig& cfg, const RunPlan& plan, const SpatialScheme& scheme,
               RunResult& result)
      : cfg_(cfg), plan_(plan), scheme_(scheme), result_(result), dir_(cfg.output_dir) {
    if (cfg_.write_files) std::filesystem::create_directories(dir_);
  }

  void snapshot(double t, const SolutionField& u, const BlendField& blend) {
    if (!cfg_.write_files) return;
    char name[64];
    std::snprintf(name, sizeof(name), "snapshot_%04d.csv", index_++);
    last_rows_ = snapshot_rows(u, scheme_.mesh, scheme_.op, scheme_.eq, blend);
    write(name, last_rows_);
    snapshot_times_.emplace_back(name, t);
    last_snapshot_t_ = t;
  }

  double last_snapshot_time() const { return last_snapshot_t_; }

  void slices() {
    if (!cfg_.write_files || last_rows_.empty()) return;
    for (const SliceRequest& s : cfg_.slices) {
      const std::string name = std::string("slice_") + (s.axis == 0 ? "x" : "y") + "_" +
                               format_double(s.coord) + ".csv";
      write(name, slice_rows(last_rows_, s.axis, s.coord));
    }
  }

  void diagnostics(const DiagnosticsRecorder& rec) {
    if (!cfg_.write_files) return;
    rec.write_csv((dir_ / "diagnostics.csv").string());
    result_.files.push_back((dir_ / "diagnostics.csv").string());
  }

  void manifest(const std::string& status) {
    if (!cfg_.write_files) return;
    Manifest m;
    m.set("version", std::string(version_string()));
    for (const auto& [k, v] : describe(cfg_)) m.set("config." + k, v);
    m.set("elements_per_axis", static_cast<long>(plan_.elements_per_axis));
    m.set("nodes_per_element", static_cast<long>(plan_.scheme.n_nodes()));
    m.set("dt", plan_.dt);
    m.set("t_end", plan_.problem.t_end);
    m.set("gamma", plan_.problem.eq.gamma);
    m.set("c_h", plan_.problem.eq.c_h);
    m.set("status", status);
    if (!result_.failure.empty()) m.set("failure", result_.failure);
    m.set("steps", result_.steps);
    m.set("t_final", result_.t_final);
    m.set("max_relative_mass_drift", result_.max_relative_mass_drift);
    m.set("min_rho", result_.min_rho);
    m.set("min_p", result_.min_p);
    if (cfg_.limiter == LimiterKind::IDP) {
      m.set("idp_max_density_violation", result_.max_density_violation);
      m.set("idp_max_entropy_violation", result_.max_entropy_violation);
      m.set("idp_fallback_nodes", result_.idp_fallback_nodes);
    }
    for (std::size_t k = 0; k < snapshot_times_.size(); ++k)
      m.set("snapshot." + std::to_string(k),
            snapshot_times_[k].first + " t=" + format_double(snapshot_times_[k].second));
    m.set("wall_seconds", result_.wall_seconds);
    m.write((dir_ / "manifest.txt").string());
    result_.files.push_back((dir_ / "manifest.txt").string());
  }

 private:
  void write(const std::string& name, const std::vector<SnapshotRow>& rows) {
    const std::string path = (dir_ / name).string();
    write_snapshot_csv(path, rows);
    result_.files.push_back(path);
  }

  const RunConfig& cfg_;
  const RunPlan& plan_;
  const SpatialScheme& scheme_;
  RunResult& result_;
  std::filesystem::path dir_;
  int index_ = 0;
  double last_snapshot_t_ = -1.0;
  std::vector<SnapshotRow> last_rows_;
  std::vector<std::pair<std::string, double>> snapshot_times_;
};

}  // namespace

RunResult run_simulation(const RunConfig& cfg, std::ostream* log) {
  const RunPlan plan = validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const SpatialScheme scheme{plan.scheme.build(), plan.mesh, plan.problem.eq, cfg.volume_flux,
                             true};
  LimiterConfig lim;
  lim.kind = cfg.limiter;
  lim.mode = cfg.blend;
  lim.loehner_eps = cfg.loehner_eps;
  lim.idp.density = cfg.idp_density;
  lim.idp.entropy = cfg.idp_entropy;
  lim.idp.entropy_only_where_density_limited = cfg.idp_entropy_only_where_density_limited;
  const HybridSolver solver(scheme, lim);

  RunResult res;
  res.dt = plan.dt;
  const double t_end = plan.problem.t_end;
  OutputWriter out(cfg, plan, scheme, res);
  DiagnosticsRecorder rec(cfg.diag_interval);

  SolutionField u = initialize_field(plan.mesh, scheme.op, plan.problem.initial, scheme.eq);
  BlendField blend;
  double t = 0.0;
  try {
    blend = solver.a_priori_blend(u);
    const FieldExtrema ex0 = field_extrema(u, scheme.eq);
    res.min_rho = ex0.min_rho;
    res.min_p = ex0.min_p;
    res.initial_mass = total_mass(u, scheme);
    rec.sample(0.0, u, scheme);
    out.snapshot(0.0, u, blend);

    long k = 0;
    double next_output = cfg.output_interval;
    while (t < t_end) {
      const double t_next = std::min(t_end, static_cast<double>(k + 1) * plan.dt);
      StepOutput so;
      u = solver.step(u, t_next - t, t, so);
      ++k;
      t = t_next;
      blend = std::move(so.last_blend);
      for (const StageRecord& s : so.stages) {
        rec.add_stage(s);
        res.min_rho = std::min(res.min_rho, s.min_rho);
        res.min_p = std::min(res.min_p, s.min_p);
        res.max_density_violation = std::max(res.max_density_violation, s.idp.max_density_violation);
        res.max_entropy_violation = std::max(res.max_entropy_violation, s.idp.max_entropy_violation);
        res.idp_fallback_nodes += s.idp.fallback_nodes;
      }
      const double mass = total_mass(u, scheme);
      res.max_relative_mass_drift =
          std::max(res.max_relative_mass_drift,
                   std::abs(mass - res.initial_mass) / std::abs(res.initial_mass));
      res.steps = k;
      res.t_final = t;
      if (rec.due(t) || t >= t_end) rec.sample(t, u, scheme);
      if (cfg.output_interval > 0.0 && t >= next_output - 1e-9 * cfg.output_interval && t < t_end) {
        out.snapshot(t, u, blend);
        while (next_output <= t + 1e-9 * cfg.output_interval) next_output += cfg.output_interval;
      }
      if (log && (k % 50 == 0 || t >= t_end))
        *log << "step " << k << " t=" << t << " S=" << rec.samples().back().total_entropy
             << " wall=" << elapsed() << "s\n";
    }
    if (t_end > 0.0) out.snapshot(t, u, blend);
    out.slices();
    res.ok = true;
  } catch (const NumericalError& e) {
    res.ok = false;
    res.failure = e.what();
    res.t_final = t;
  }
  res.wall_seconds = elapsed();
  res.diagnostics = rec.samples();
  out.diagnostics(rec);
  out.manifest(res.ok ? "ok" : "failed");
  res.field = std::move(u);
  res.blend = std::move(blend);
  return res;
}

}  // namespace sbpmhd
