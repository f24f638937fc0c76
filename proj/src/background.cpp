#include "kg/background.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kg {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// value and derivatives of the Lagrange quadratic through three samples
BackgroundModel::Eval quadratic_fit(double t, double t0, double y0, double t1,
                                    double y1, double t2, double y2) {
  const double d0 = (t0 - t1) * (t0 - t2);
  const double d1 = (t1 - t0) * (t1 - t2);
  const double d2 = (t2 - t0) * (t2 - t1);
  const double a = y0 * (t - t1) * (t - t2) / d0 + y1 * (t - t0) * (t - t2) / d1 +
                   y2 * (t - t0) * (t - t1) / d2;
  const double adot = y0 * (2 * t - t1 - t2) / d0 + y1 * (2 * t - t0 - t2) / d1 +
                      y2 * (2 * t - t0 - t1) / d2;
  const double addot = 2.0 * (y0 / d0 + y1 / d1 + y2 / d2);
  return {a, adot, addot};
}

} // namespace

BackgroundModel BackgroundModel::minkowski(int n, double m) {
  require(n >= 1, "background: n must be >= 1");
  require(m != 0.0, "background: m must be nonzero");
  return BackgroundModel(Kind::Minkowski, n, m);
}

BackgroundModel BackgroundModel::de_sitter(double H, int n, double m) {
  require(H > 0.0, "background: de Sitter requires H > 0");
  require(n >= 1, "background: n must be >= 1");
  require(m != 0.0, "background: m must be nonzero");
  BackgroundModel b(Kind::DeSitter, n, m);
  b.H_ = H;
  return b;
}

BackgroundModel BackgroundModel::power_law(double k, int n, double m) {
  require(k > 0.0, "background: power law requires k > 0");
  require(n >= 1, "background: n must be >= 1");
  require(m != 0.0, "background: m must be nonzero");
  BackgroundModel b(Kind::PowerLaw, n, m);
  b.k_ = k;
  return b;
}

BackgroundModel BackgroundModel::tabulated(
    std::vector<std::pair<double, double>> samples, int n, double m) {
  require(n >= 1, "background: n must be >= 1");
  require(m != 0.0, "background: m must be nonzero");
  require(samples.size() >= 3, "background: tabulated needs >= 3 samples");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    require(samples[i].second > 0.0, "background: tabulated a-values must be positive");
    if (i > 0)
      require(samples[i].first > samples[i - 1].first,
              "background: tabulated times must be strictly increasing");
  }
  BackgroundModel b(Kind::Tabulated, n, m);
  b.samples_ = std::move(samples);
  return b;
}

BackgroundModel::Eval BackgroundModel::eval(double t) const {
  switch (kind_) {
    case Kind::Minkowski:
      return {1.0, 0.0, 0.0};
    case Kind::DeSitter: {
      const double a = std::exp(H_ * t);
      return {a, H_ * a, H_ * H_ * a};
    }
    case Kind::PowerLaw: {
      require(t > 0.0, "background: power law requires t > 0");
      const double a = std::pow(t, k_);
      return {a, k_ * a / t, k_ * (k_ - 1.0) * a / (t * t)};
    }
    case Kind::Tabulated: {
      require(t >= samples_.front().first && t <= samples_.back().first,
              "background: t outside tabulated range");
      auto it = std::lower_bound(
          samples_.begin(), samples_.end(), t,
          [](const std::pair<double, double>& s, double x) { return s.first < x; });
      std::size_t i = static_cast<std::size_t>(it - samples_.begin());
      // center the 3-point stencil; one-sided at the ends
      if (i == 0) i = 1;
      if (i + 1 >= samples_.size()) i = samples_.size() - 2;
      return quadratic_fit(t, samples_[i - 1].first, samples_[i - 1].second,
                           samples_[i].first, samples_[i].second,
                           samples_[i + 1].first, samples_[i + 1].second);
    }
  }
  throw std::logic_error("background: unknown kind");
}

double BackgroundModel::hubble_ratio(double t) const {
  switch (kind_) {
    case Kind::Minkowski: return 0.0;
    case Kind::DeSitter: return H_;
    case Kind::PowerLaw:
      require(t > 0.0, "background: power law requires t > 0");
      return k_ / t;
    case Kind::Tabulated: {
      const Eval e = eval(t);
      return e.adot / e.a;
    }
  }
  throw std::logic_error("background: unknown kind");
}

double BackgroundModel::curved_mass_squared(double t) const {
  const Eval e = eval(t);
  const double h = e.adot / e.a;
  const double n = static_cast<double>(n_);
  return m_ * m_ + (n / 2.0 - n * n / 4.0) * h * h - (n / 2.0) * e.addot / e.a;
}

double BackgroundModel::min_admissible_t0(double epsilon) const {
  require(epsilon > 0.0, "background: epsilon must be positive");
  const double bound = epsilon / (6.0 * n_);
  switch (kind_) {
    case Kind::Minkowski: return 0.0;
    case Kind::DeSitter:
      if (H_ > bound)
        throw std::domain_error("background: cosmology inadmissible for this epsilon "
                                "(de Sitter H > epsilon/6n)");
      return 0.0;
    case Kind::PowerLaw:
      return 6.0 * k_ * n_ / epsilon;
    case Kind::Tabulated: {
      // smallest sample time from which the ratio stays under the bound
      double t0 = std::numeric_limits<double>::infinity();
      for (auto it = samples_.rbegin(); it != samples_.rend(); ++it) {
        if (hubble_ratio(it->first) <= bound)
          t0 = it->first;
        else
          break;
      }
      if (!std::isfinite(t0))
        throw std::domain_error("background: cosmology inadmissible for this epsilon "
                                "(tabulated ratio never under epsilon/6n)");
      return t0;
    }
  }
  throw std::logic_error("background: unknown kind");
}

CosmologyAudit BackgroundModel::audit(double epsilon, double t0, double t_end,
                                      int samples) const {
  require(epsilon > 0.0, "background: epsilon must be positive");
  require(t0 > 0.0 && t_end > t0, "background: audit requires t_end > t0 > 0");
  require(samples >= 2, "background: audit requires >= 2 samples");

  CosmologyAudit out;
  out.epsilon_bound = epsilon / (6.0 * n_);
  out.hubble_ratio_at_t0 = hubble_ratio(t0);
  out.initial_time_ok = out.hubble_ratio_at_t0 <= out.epsilon_bound;
  try {
    out.min_admissible_t0 = min_admissible_t0(epsilon);
  } catch (const std::domain_error&) {
    out.min_admissible_t0 = std::numeric_limits<double>::infinity();
  }

  // Eq. positivity/monotonicity of M on a uniform sample of [t0, t_end];
  // c0 operationalized as min sampled M > 1e-10.
  out.curved_mass_positive = true;
  out.curved_mass_nonincreasing = true;
  double prev_M = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t = t0 + (t_end - t0) * i / (samples - 1);
    const double M2 = curved_mass_squared(t);
    const double M = M2 > 0.0 ? std::sqrt(M2) : 0.0;
    if (!(M > 1e-10)) out.curved_mass_positive = false;
    if (i > 0 && M > prev_M + 1e-12 * (1.0 + prev_M))
      out.curved_mass_nonincreasing = false;
    prev_M = M;
  }
  return out;
}

std::string to_string(BackgroundModel::Kind kind) {
  switch (kind) {
    case BackgroundModel::Kind::Minkowski: return "minkowski";
    case BackgroundModel::Kind::DeSitter: return "de_sitter";
    case BackgroundModel::Kind::PowerLaw: return "power_law";
    case BackgroundModel::Kind::Tabulated: return "tabulated";
  }
  return "?";
}

} // namespace kg
