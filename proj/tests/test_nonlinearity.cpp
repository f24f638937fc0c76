#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kg/nonlinearity.hpp"

using namespace kg;

TEST_CASE("focusing power: f = |s|^(p-1) s, F = |s|^(p+1)/(p+1)") {
  const auto nl = NonlinearitySpec::focusing_power(3.0, 2.0);
  CHECK(nl.f(2.0) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(nl.f(-2.0) == doctest::Approx(-8.0).epsilon(1e-15));
  CHECK(nl.F(2.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(nl.F(-2.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(nl.alpha_f() == 2.0);

  const auto frac = NonlinearitySpec::focusing_power(2.5, 2.0);
  CHECK(frac.f(-3.0) == doctest::Approx(-std::pow(3.0, 1.5) * 3.0).epsilon(1e-14));
  CHECK(frac.F(3.0) == doctest::Approx(std::pow(3.0, 3.5) / 3.5).epsilon(1e-14));
}

TEST_CASE("defocusing power flips the sign of f and F") {
  const auto nl = NonlinearitySpec::defocusing_power(3.0, 2.0);
  CHECK(nl.f(2.0) == doctest::Approx(-8.0).epsilon(1e-15));
  CHECK(nl.F(2.0) == doctest::Approx(-4.0).epsilon(1e-15));
}

TEST_CASE("plain power requires an odd integer exponent") {
  CHECK_NOTHROW((void)NonlinearitySpec::power(3.0, 2.0));
  CHECK_NOTHROW((void)NonlinearitySpec::power(5.0, 2.0));
  CHECK_THROWS_AS((void)NonlinearitySpec::power(2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS((void)NonlinearitySpec::power(3.5, 2.0), std::invalid_argument);
  const auto nl = NonlinearitySpec::power(5.0, 2.0);
  CHECK(nl.f(-2.0) == doctest::Approx(-32.0).epsilon(1e-15));
}

TEST_CASE("zero nonlinearity is identically zero and admissible") {
  const auto nl = NonlinearitySpec::zero(2.0);
  CHECK(nl.f(7.0) == 0.0);
  CHECK(nl.F(7.0) == 0.0);
  const auto rep = nl.check_admissibility(3);
  CHECK(rep.epsilon_condition);
  CHECK(rep.lipschitz_exponent_ok);
  CHECK(rep.admissible());
}

TEST_CASE("epsilon condition s f(s) >= (2+eps) F(s) holds iff p + 1 >= 2 + eps") {
  // p = 3: s f = s^4, (2+eps) F = (2+eps) s^4/4; holds iff eps <= 2
  CHECK(NonlinearitySpec::focusing_power(3.0, 2.0).check_admissibility(3).epsilon_condition);
  CHECK(NonlinearitySpec::focusing_power(3.0, 1.5).check_admissibility(3).epsilon_condition);
  CHECK_FALSE(
      NonlinearitySpec::focusing_power(3.0, 2.5).check_admissibility(3).epsilon_condition);

  // numeric spot check of the inequality itself
  const auto nl = NonlinearitySpec::focusing_power(3.0, 2.0);
  for (double s : {-3.0, -0.5, 0.0, 0.5, 3.0})
    CHECK(s * nl.f(s) >= (2.0 + 2.0) * nl.F(s) - 1e-12);
}

TEST_CASE("defocusing power always fails the epsilon condition") {
  const auto rep =
      NonlinearitySpec::defocusing_power(3.0, 2.0).check_admissibility(3);
  CHECK_FALSE(rep.epsilon_condition);
  CHECK_FALSE(rep.admissible());

  // with p + 1 > 2 + eps the inequality is violated pointwise; a witness is attached
  const auto strict = NonlinearitySpec::defocusing_power(3.0, 1.0);
  const auto strict_rep = strict.check_admissibility(3);
  CHECK_FALSE(strict_rep.epsilon_condition);
  REQUIRE(strict_rep.counterexample_s.has_value());
  const double s = *strict_rep.counterexample_s;
  CHECK(s * strict.f(s) < (2.0 + 1.0) * strict.F(s));
}

TEST_CASE("lipschitz exponent bound alpha <= 2/(n-2) for n >= 3") {
  // n = 3: bound 2; p = 3 gives alpha = 2 (ok), p = 5 gives alpha = 4 (not ok)
  const auto cubic = NonlinearitySpec::focusing_power(3.0, 2.0).check_admissibility(3);
  CHECK(cubic.lipschitz_exponent_ok);
  CHECK(cubic.alpha_f == 2.0);
  CHECK(cubic.exponent_bound == 2.0);
  CHECK_FALSE(cubic.exponent_constraint_vacuous);

  const auto quintic = NonlinearitySpec::focusing_power(5.0, 2.0).check_admissibility(3);
  CHECK_FALSE(quintic.lipschitz_exponent_ok);

  // n <= 2: no constraint
  const auto low_dim = NonlinearitySpec::focusing_power(5.0, 2.0).check_admissibility(2);
  CHECK(low_dim.lipschitz_exponent_ok);
  CHECK(low_dim.exponent_constraint_vacuous);
}

TEST_CASE("exponents must exceed 1") {
  CHECK_THROWS_AS((void)NonlinearitySpec::focusing_power(1.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)NonlinearitySpec::focusing_power(0.5, 2.0),
                  std::invalid_argument);
}
