#include "doctest.h"

#include "hulthen/shift.hpp"

#include <cmath>
#include <limits>

using namespace hulthen;

namespace {

// frozen double-precision reference values for the matched scheme
constexpr double kGammaRef = 0.4990429999;
constexpr double kC0Ref = 0.082305816783797781;
constexpr double kSlopeDeficitRef = -5.0677352533479159e-4;

} // namespace

TEST_SUITE("shift") {

TEST_CASE("matched constants are pinned") {
  const auto p = solve_shift_parameters(1e-12);
  CHECK(p.gamma_match == doctest::Approx(kGammaRef).epsilon(1e-12));
  CHECK(p.c0 == doctest::Approx(kC0Ref).epsilon(1e-14));
  // published short forms
  CHECK(std::abs(p.gamma_match - 0.4990430) < 1e-6);
  CHECK(std::abs(p.c0 - 0.0823058) < 1e-6);
}

TEST_CASE("value condition closes, slope condition cannot") {
  const auto p = solve_shift_parameters(1e-12);
  CHECK(std::abs(shift_value_condition(p.gamma_match, p.c0)) < 1e-12);

  // the slope equation has no root: its residual is -x^4/120 + O(x^6),
  // so at gamma_match a fixed structural deficit remains
  const double slope = shift_slope_condition(p.gamma_match);
  CHECK(slope == doctest::Approx(kSlopeDeficitRef).epsilon(1e-9));

  // strictly negative across the whole candidate interval
  for (double x = 0.01; x <= 5.0; x += 0.01)
    CHECK(shift_slope_condition(x) < 0.0);

  // leading-order deficit -x^4/120 for small arguments
  CHECK(shift_slope_condition(0.05) ==
        doctest::Approx(-std::pow(0.05, 4) / 120.0).epsilon(1e-3));
}

TEST_CASE("tolerance validation") {
  CHECK_THROWS_AS(solve_shift_parameters(0.0), InvalidInput);
  CHECK_THROWS_AS(solve_shift_parameters(-1e-12), InvalidInput);
  CHECK_THROWS_AS(solve_shift_parameters(1e-7), InvalidInput);
  CHECK_THROWS_AS(
      solve_shift_parameters(std::numeric_limits<double>::quiet_NaN()),
      InvalidInput);
  CHECK_NOTHROW(solve_shift_parameters(1e-8));
  CHECK_NOTHROW(solve_shift_parameters(1e-14));
}

TEST_CASE("cached constants are stable") {
  const auto& a = matched_shift_parameters();
  const auto& b = matched_shift_parameters();
  CHECK(&a == &b);
  CHECK(a.c0 == kC0Ref);
}

TEST_CASE("approximation is exact at the matching radius") {
  const auto p = matched_shift_parameters();
  for (double alpha : {0.05, 0.2, 1.0, 3.0}) {
    const double r0 = p.gamma_match / alpha;
    const double approx = centrifugal_approx(r0, alpha, SchemeSelector::matched());
    CHECK(approx == doctest::Approx(1.0 / (r0 * r0)).epsilon(1e-12));
  }
}

TEST_CASE("slope mismatch at the matching radius is the structural deficit") {
  // central difference of the approximation against the exact -2/r0^3;
  // the relative gap is (x^4/120)/2 at leading order, about 2.53e-4,
  // and cannot be pushed below that by any step-size choice
  const auto p = matched_shift_parameters();
  const double alpha = 0.05;
  const double r0 = p.gamma_match / alpha;
  const double h = 1e-6 * r0;
  const auto scheme = SchemeSelector::matched();
  const double num = (centrifugal_approx(r0 + h, alpha, scheme) -
                      centrifugal_approx(r0 - h, alpha, scheme)) /
                     (2.0 * h);
  const double exact = -2.0 / (r0 * r0 * r0);
  const double rel = (num - exact) / exact;
  CHECK(rel == doctest::Approx(-2.5338677848e-4).epsilon(1e-5));
  CHECK(std::abs(rel) > 1e-4);
  CHECK(std::abs(rel) < 5e-4);
}

TEST_CASE("screened profile converges to 1/r^2 as screening vanishes") {
  const double r = 2.0;
  const auto scheme = SchemeSelector::matched();
  double prev = 1.0;
  for (double alpha : {1e-2, 1e-3, 1e-4}) {
    const double rel = std::abs(centrifugal_approx(r, alpha, scheme) -
                                centrifugal_exact(r)) *
                       (r * r);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 1e-7);
}

TEST_CASE("custom shift of zero reproduces the unshifted profile exactly") {
  const auto zero = SchemeSelector::custom_shift(0.0);
  const auto plain = SchemeSelector::unshifted();
  for (double r : {0.3, 1.0, 4.0, 21.7})
    CHECK(centrifugal_approx(r, 0.15, zero) ==
          centrifugal_approx(r, 0.15, plain));
}

TEST_CASE("large-argument profile decays to the shift floor") {
  const auto p = matched_shift_parameters();
  const double alpha = 2.0;
  const double v = centrifugal_approx(400.0, alpha, SchemeSelector::matched());
  CHECK(v == doctest::Approx(alpha * alpha * p.c0).epsilon(1e-13));
  CHECK(std::isfinite(centrifugal_approx(1e6, alpha, SchemeSelector::matched())));
}

TEST_CASE("reference point alpha=0.05, r=10") {
  const double v = centrifugal_approx(10.0, 0.05, SchemeSelector::matched());
  CHECK(v == doctest::Approx(0.010000009764541405).epsilon(1e-12));
  CHECK(std::abs(v - 0.01) < 2e-5);
}

TEST_CASE("error profile over the matching window") {
  const double alpha = 0.05;
  const auto prof = approximation_error_profile(
      alpha, 0.4 / alpha, 1.2 / alpha, 1001, SchemeSelector::matched());
  REQUIRE(prof.size() == 1001);
  CHECK(prof.front().r == doctest::Approx(8.0));
  CHECK(prof.back().r == doctest::Approx(24.0));

  double max_rel = 0.0, at_r = 0.0;
  for (const auto& s : prof) {
    CHECK(s.exact == doctest::Approx(1.0 / (s.r * s.r)).epsilon(1e-15));
    if (std::abs(s.relative_error) > max_rel) {
      max_rel = std::abs(s.relative_error);
      at_r = s.r;
    }
  }
  // worst case sits at the right edge of the window
  CHECK(at_r == doctest::Approx(24.0));
  CHECK(max_rel == doctest::Approx(6.6904313949722313e-3).epsilon(1e-9));
}

TEST_CASE("unshifted profile is worse than matched away from small r") {
  const double alpha = 0.1;
  const auto matched = approximation_error_profile(alpha, 4.0, 12.0, 33,
                                                   SchemeSelector::matched());
  const auto plain = approximation_error_profile(alpha, 4.0, 12.0, 33,
                                                 SchemeSelector::unshifted());
  for (size_t i = 0; i < matched.size(); ++i)
    CHECK(std::abs(matched[i].relative_error) <
          std::abs(plain[i].relative_error));
}

TEST_CASE("profile endpoints and argument validation") {
  const auto two = approximation_error_profile(1.0, 0.5, 2.5, 2,
                                               SchemeSelector::unshifted());
  REQUIRE(two.size() == 2);
  CHECK(two[0].r == 0.5);
  CHECK(two[1].r == 2.5);

  CHECK_THROWS_AS(approximation_error_profile(0.0, 1.0, 2.0, 10,
                                              SchemeSelector::unshifted()),
                  InvalidInput);
  CHECK_THROWS_AS(approximation_error_profile(1.0, -1.0, 2.0, 10,
                                              SchemeSelector::unshifted()),
                  InvalidInput);
  CHECK_THROWS_AS(approximation_error_profile(1.0, 2.0, 2.0, 10,
                                              SchemeSelector::unshifted()),
                  InvalidInput);
  CHECK_THROWS_AS(approximation_error_profile(1.0, 1.0, 2.0, 1,
                                              SchemeSelector::unshifted()),
                  InvalidInput);
  CHECK_THROWS_AS(centrifugal_exact(0.0), DomainError);
  CHECK_THROWS_AS(centrifugal_approx(-1.0, 1.0, SchemeSelector::unshifted()),
                  DomainError);
  CHECK_THROWS_AS(centrifugal_approx(1.0, 0.0, SchemeSelector::unshifted()),
                  InvalidInput);
  CHECK_THROWS_AS(shift_slope_condition(0.0), DomainError);
  CHECK_THROWS_AS(shift_value_condition(-0.5, 0.0), DomainError);
}

} // TEST_SUITE
