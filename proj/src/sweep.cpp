#include "kg/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace kg {

using nlohmann::json;

SweepAxis parse_sweep_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("sweep: expected key=lo:hi:steps, got '" + text + "'");
  SweepAxis axis;
  axis.path = text.substr(0, eq);
  const std::string range = text.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = range.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("sweep: expected key=lo:hi:steps, got '" + text + "'");
  try {
    axis.lo = std::stod(range.substr(0, c1));
    axis.hi = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    axis.steps = std::stoi(range.substr(c2 + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("sweep: bad range in '" + text + "'");
  }
  if (axis.steps < 1) throw std::invalid_argument("sweep: steps must be >= 1");
  return axis;
}

namespace {

void set_by_path(json& j, const std::string& path, double value) {
  json* node = &j;
  std::stringstream ss(path);
  std::string key, prev;
  json* parent = nullptr;
  while (std::getline(ss, key, '.')) {
    parent = node;
    prev = key;
    node = &(*node)[key];
  }
  if (parent == nullptr) throw std::invalid_argument("sweep: empty path");
  (*parent)[prev] = value;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KG_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

SweepResult run_sweep(const RunConfig& base, const std::vector<SweepAxis>& axes,
                      int workers) {
  if (axes.empty()) throw std::invalid_argument("sweep: at least one --vary required");

  long total = 1;
  for (const auto& a : axes) total *= a.steps;
  if (total > 100000) throw std::invalid_argument("sweep: too many cells");

  SweepResult sweep;
  sweep.axes = axes;
  sweep.cells.resize(total);

  const json base_json = config_to_json(base);

  auto run_cell = [&](int index) {
    SweepCell& cell = sweep.cells[index];
    cell.index = index;
    // decode the cell index into one value per axis (row-major)
    int rem = index;
    cell.values.resize(axes.size());
    for (int ax = static_cast<int>(axes.size()) - 1; ax >= 0; --ax) {
      cell.values[ax] = axes[ax].value(rem % axes[ax].steps);
      rem /= axes[ax].steps;
    }
    try {
      json j = base_json;
      for (std::size_t ax = 0; ax < axes.size(); ++ax)
        set_by_path(j, axes[ax].path, cell.values[ax]);
      j["run_id"] = base.run_id + "-cell" + std::to_string(index);
      const RunConfig cfg = parse_config(j);
      cell.result = simulate_run(resolve(cfg));
    } catch (const std::exception& e) {
      cell.config_error = true;
      cell.error = e.what();
    }
  };

  const int nworkers = worker_count(workers);
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min<long>(nworkers, total); ++w) {
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < total; i = next.fetch_add(1))
        run_cell(static_cast<int>(i));
    });
  }
  for (auto& th : pool) th.join();

  for (const auto& cell : sweep.cells)
    if (!cell.config_error && cell.result.anomaly) sweep.any_anomaly = true;
  return sweep;
}

std::string sweep_to_csv(const SweepResult& sweep) {
  std::string out = "cell";
  for (const auto& a : sweep.axes) out += "," + a.path;
  out += ",theorem_applies,outcome,t_blow,variant_proof,bound_respected\n";
  char buf[64];
  for (const auto& cell : sweep.cells) {
    out += std::to_string(cell.index);
    for (double v : cell.values) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out += buf;
    }
    if (cell.config_error) {
      out += ",false,config_error,,,\n";
      continue;
    }
    const RunResult& r = cell.result;
    out += r.hypotheses.theorem_applies ? ",true" : ",false";
    out += "," + to_string(r.outcome->kind);
    if (r.outcome->blew_up()) {
      std::snprintf(buf, sizeof buf, ",%.17g", r.outcome->t_blow);
      out += buf;
    } else {
      out += ",";
    }
    if (r.bound) {
      std::snprintf(buf, sizeof buf, ",%.17g", r.bound->variant_proof);
      out += buf;
      out += r.bound->bound_respected ? ",true" : ",false";
    } else {
      out += ",,";
    }
    out += "\n";
  }
  return out;
}

} // namespace kg
