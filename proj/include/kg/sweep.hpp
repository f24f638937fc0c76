#pragma once

#include <string>
#include <vector>

#include "kg/config.hpp"
#include "kg/runner.hpp"

namespace kg {

// One swept parameter: a dotted config path (e.g. "background.H" or
// "initial.A") and an inclusive linear range with `steps` samples.
struct SweepAxis {
  std::string path;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  double value(int i) const {
    return steps <= 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  }
};

// "key=lo:hi:steps"
SweepAxis parse_sweep_axis(const std::string& text);

struct SweepCell {
  int index = 0;
  std::vector<double> values; // one per axis
  bool config_error = false;
  std::string error;
  RunResult result;
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<SweepCell> cells; // sorted by cell index
  bool any_anomaly = false;
};

// Cartesian product of the axes over the base config; cells execute in a
// worker pool (count from `workers`, 0 = KG_WORKERS env or hardware
// concurrency). Output order is by cell index regardless of worker count.
SweepResult run_sweep(const RunConfig& base, const std::vector<SweepAxis>& axes,
                      int workers = 0);

std::string sweep_to_csv(const SweepResult& sweep);

} // namespace kg
