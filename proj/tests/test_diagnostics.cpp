#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "kg/diagnostics.hpp"

using namespace kg;
using namespace kg::diagnostics;

namespace {

// synthetic record series with prescribed B(t) (and optionally I, B', xi)
std::vector<DiagnosticRecord> series_from_B(const std::vector<double>& ts,
                                            double (*B)(double)) {
  std::vector<DiagnosticRecord> out;
  for (double t : ts) {
    DiagnosticRecord r;
    r.t = t;
    r.B = B(t);
    out.push_back(r);
  }
  return out;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

} // namespace

TEST_CASE("tmax_bound formulas") {
  // B0 = 4, B'0 = 2, eps = 2, t0 = 1: theorem 1 + 4/(2*2) = 2, proof 1 + 16/4 = 5
  const BoundReport r = tmax_bound(4.0, 2.0, 2.0, 1.0);
  CHECK(r.variant_theorem == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.variant_proof == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_FALSE(r.observed_t_blow.has_value());
  CHECK_FALSE(r.bound_respected);
}

TEST_CASE("tmax_bound rejects nonpositive inputs") {
  CHECK_THROWS_AS((void)tmax_bound(4.0, 0.0, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)tmax_bound(4.0, -1.0, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)tmax_bound(0.0, 2.0, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)tmax_bound(4.0, 2.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("attach_observation classifies the bound") {
  BoundReport r = tmax_bound(4.0, 2.0, 2.0, 1.0); // proof bound 5
  attach_observation(r, 3.5);
  CHECK(r.bound_respected);
  CHECK(*r.observed_t_blow == 3.5);
  attach_observation(r, 6.0);
  CHECK_FALSE(r.bound_respected);
}

TEST_CASE("invariant set verification on a synthetic admissible series") {
  std::vector<DiagnosticRecord> s;
  for (int k = 0; k < 20; ++k) {
    DiagnosticRecord r;
    r.t = 1.0 + 0.1 * k;
    r.I = -1.0 - 0.2 * k;      // stays negative
    r.Bprime = 2.0 + 0.5 * k;  // increasing
    r.xi = 0.3 + 0.01 * k;     // positive
    s.push_back(r);
  }
  const auto rep = verify_invariant_set(s);
  CHECK(rep.applicable);
  CHECK(rep.all_ok());
  CHECK(rep.violations.empty());
}

TEST_CASE("invariant set verification flags each violation with its time") {
  std::vector<DiagnosticRecord> s;
  for (int k = 0; k < 10; ++k) {
    DiagnosticRecord r;
    r.t = 0.5 * k;
    r.I = -1.0;
    r.Bprime = 1.0 + k;
    r.xi = 1.0;
    s.push_back(r);
  }
  s[4].I = 0.5;       // Nehari escapes
  s[6].Bprime = 0.1;  // B' drops
  s[7].xi = -1.0;     // xi turns negative
  const auto rep = verify_invariant_set(s);
  CHECK(rep.applicable);
  CHECK_FALSE(rep.nehari_negative_throughout);
  CHECK_FALSE(rep.bprime_nondecreasing);
  CHECK_FALSE(rep.xi_positive);
  CHECK_FALSE(rep.all_ok());
  REQUIRE(rep.violations.size() >= 3);
  bool saw_nehari = false, saw_bprime = false, saw_xi = false;
  for (const auto& v : rep.violations) {
    if (v.what.find("Nehari") != std::string::npos && v.t == 2.0) saw_nehari = true;
    if (v.what.find("B'") != std::string::npos && v.t == 3.0) saw_bprime = true;
    if (v.what.find("xi") != std::string::npos && v.t == 3.5) saw_xi = true;
  }
  CHECK(saw_nehari);
  CHECK(saw_bprime);
  CHECK(saw_xi);
}

TEST_CASE("invariant set is not applicable when the initial Nehari is nonnegative") {
  std::vector<DiagnosticRecord> s(3);
  s[0].I = 0.1;
  const auto rep = verify_invariant_set(s);
  CHECK_FALSE(rep.applicable);
  CHECK_FALSE(rep.all_ok());
}

TEST_CASE("concavity certificate accepts the canonical blowup profile") {
  // B = (T - t)^(-2) with eps = 2: G = B^(-1/2) = T - t, decreasing and
  // (weakly) concave is borderline, so use B = (T - t)^(-4): G = (T - t)^2 is
  // decreasing with positive curvature -- wrong direction. The admissible G
  // must be concave: take G = sqrt(T - t), i.e. B = (T - t)^(-1) at eps = 2.
  auto B = [](double t) { return 1.0 / (5.0 - t); };
  const auto ts = linspace(1.0, 4.5, 40);
  const auto s = series_from_B(ts, B);
  const auto rep = verify_concavity(s, 2.0);
  CHECK(rep.applicable);
  CHECK(rep.decreasing);
  CHECK(rep.concave);
  CHECK(rep.all_ok());
  CHECK_FALSE(rep.first_violation_t.has_value());
}

TEST_CASE("concavity check rejects convex or growing G") {
  // B decaying makes G = B^(-eps/4) grow
  const auto growing = series_from_B(linspace(0.0, 2.0, 30),
                                     [](double t) { return std::exp(-t); });
  const auto rep1 = verify_concavity(growing, 2.0);
  CHECK(rep1.applicable);
  CHECK_FALSE(rep1.decreasing);
  REQUIRE(rep1.first_violation_t.has_value());

  // B = 1/(1 + (T-t)^2) bumps: G = sqrt(1 + (5-t)^2) is convex in t
  const auto convex = series_from_B(linspace(0.0, 4.0, 30), [](double t) {
    return 1.0 / (1.0 + (5.0 - t) * (5.0 - t));
  });
  const auto rep2 = verify_concavity(convex, 2.0);
  CHECK(rep2.applicable);
  CHECK_FALSE(rep2.concave);
}

TEST_CASE("concavity check needs enough records and positive B") {
  std::vector<DiagnosticRecord> tiny(4);
  CHECK_FALSE(verify_concavity(tiny, 2.0).applicable);

  auto s = series_from_B(linspace(1.0, 2.0, 10), [](double t) { return 2.0 - t; });
  s[9].B = -0.5;
  CHECK_FALSE(verify_concavity(s, 2.0).applicable);
}

TEST_CASE("certificate B'' B - (4+eps)/4 B'^2 is positive on the blowup profile") {
  // B = (T-t)^(-1), eps = 2: B''B = 2 B^4, 1.5 B'^2 = 1.5 B^4, certificate 0.5 B^4
  const double T = 5.0;
  std::vector<DiagnosticRecord> s;
  for (double t : linspace(1.0, 4.0, 60)) {
    DiagnosticRecord r;
    r.t = t;
    r.B = 1.0 / (T - t);
    r.Bprime = 1.0 / ((T - t) * (T - t));
    s.push_back(r);
  }
  fill_concavity_certificates(s, 2.0);
  for (std::size_t k = 1; k + 1 < s.size(); ++k) {
    const double expected = 0.5 * std::pow(s[k].B, 4.0);
    CHECK(s[k].concavity_certificate ==
          doctest::Approx(expected).epsilon(0.05)); // discrete B'' is approximate
  }
  // endpoint rows copy their neighbors
  CHECK(s.front().concavity_certificate == s[1].concavity_certificate);
  CHECK(s.back().concavity_certificate == s[s.size() - 2].concavity_certificate);
}
