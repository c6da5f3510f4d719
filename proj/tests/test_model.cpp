#include "doctest.h"

#include "hulthen/model.hpp"

#include <limits>
#include <string>

using namespace hulthen;

TEST_SUITE("model") {

TEST_CASE("validate computes the derived scalars") {
  const auto p = validate({2.0, 3.0, 0.5}, {1.5, 0.25}, {2, 1, 3});
  CHECK(p.s_tilde == doctest::Approx(2.75).epsilon(1e-15));
  CHECK(p.gamma_ang == doctest::Approx(2.0).epsilon(1e-15)); // (3+2-1)(3+2-3)/4
  CHECK(p.r0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.potential.v0 == 2.0);
  CHECK(p.mass.m1 == 0.25);
  CHECK(p.state.n == 2);
}

TEST_CASE("angular factor across dimensions") {
  auto gamma_ang = [](int l, int d) {
    return validate({1.0, 1.0, 1.0}, {}, {0, l, d}).gamma_ang;
  };
  CHECK(gamma_ang(0, 3) == doctest::Approx(0.0));   // 2*0/4
  CHECK(gamma_ang(1, 3) == doctest::Approx(2.0));   // 4*2/4
  CHECK(gamma_ang(2, 3) == doctest::Approx(6.0));   // l(l+1) in 3D
  CHECK(gamma_ang(3, 3) == doctest::Approx(12.0));
  CHECK(gamma_ang(0, 1) == doctest::Approx(0.0));   // 0*(-2)/4
  CHECK(gamma_ang(0, 2) == doctest::Approx(-0.25)); // 1*(-1)/4
  CHECK(gamma_ang(0, 5) == doctest::Approx(2.0));
  CHECK(gamma_ang(2, 5) == doctest::Approx(12.0));
}

TEST_CASE("validate is idempotent on already-valid data") {
  const auto p = validate({1.0, 2.0, 1.5}, {2.0, -0.5}, {1, 2, 4});
  const auto q = validate(p.potential, p.mass, p.state);
  CHECK(q.s_tilde == p.s_tilde);
  CHECK(q.gamma_ang == p.gamma_ang);
  CHECK(q.r0 == p.r0);
}

TEST_CASE("validate rejects out-of-range input") {
  const PotentialSpec pot{1.0, 1.0, 1.0};
  const MassSpec mass{1.0, 0.0};
  const QuantumState st{1, 0, 3};

  CHECK_THROWS_AS(validate({1.0, 1.0, 0.0}, mass, st), InvalidInput);
  CHECK_THROWS_AS(validate({1.0, 1.0, -2.0}, mass, st), InvalidInput);
  CHECK_THROWS_AS(validate(pot, {0.0, 0.0}, st), InvalidInput);
  CHECK_THROWS_AS(validate(pot, {-1.0, 0.0}, st), InvalidInput);
  CHECK_THROWS_AS(validate(pot, mass, {-1, 0, 3}), InvalidInput);
  CHECK_THROWS_AS(validate(pot, mass, {1, -1, 3}), InvalidInput);
  CHECK_THROWS_AS(validate(pot, mass, {1, 0, 0}), InvalidInput);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(validate({nan, 1.0, 1.0}, mass, st), InvalidInput);
  CHECK_THROWS_AS(validate({1.0, inf, 1.0}, mass, st), InvalidInput);
  CHECK_THROWS_AS(validate({1.0, 1.0, nan}, mass, st), InvalidInput);
  CHECK_THROWS_AS(validate(pot, {nan, 0.0}, st), InvalidInput);
  CHECK_THROWS_AS(validate(pot, {1.0, inf}, st), InvalidInput);
}

TEST_CASE("negative couplings and m1 are legal") {
  CHECK_NOTHROW(validate({-10.0, 20.0, 1.0}, {5.0, 1.0}, {1, 0, 3}));
  CHECK_NOTHROW(validate({2.0, -3.0, 1.0}, {1.0, -0.5}, {0, 0, 1}));
}

TEST_CASE("scheme selector factories") {
  CHECK(SchemeSelector::unshifted().kind == ShiftKind::unshifted);
  CHECK(SchemeSelector::matched().kind == ShiftKind::matched);

  const auto custom = SchemeSelector::custom_shift(0.05);
  CHECK(custom.kind == ShiftKind::custom);
  CHECK(custom.custom_c0 == 0.05);

  CHECK_NOTHROW(SchemeSelector::custom_shift(0.0));
  CHECK_THROWS_AS(SchemeSelector::custom_shift(-0.1), InvalidInput);
  CHECK_THROWS_AS(
      SchemeSelector::custom_shift(std::numeric_limits<double>::quiet_NaN()),
      InvalidInput);
}

TEST_CASE("error taxonomy stays catchable through the common base") {
  try {
    validate({1.0, 1.0, -1.0}, {}, {});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("alpha") != std::string::npos);
  }
}

} // TEST_SUITE
