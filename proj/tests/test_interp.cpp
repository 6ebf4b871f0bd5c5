#include <doctest.h>

#include "vtb/error.hpp"
#include "vtb/interp.hpp"

using namespace vtb;

TEST_CASE("pchip reproduces knot values exactly") {
  Eigen::VectorXd x(4), y(4);
  x << 0.0, 1.0, 2.0, 3.0;
  y << 0.0, 1.0, 4.0, 9.0;
  const PchipInterpolant p(x, y);
  for (Eigen::Index i = 0; i < 4; ++i)
    CHECK(p(x(i)) == doctest::Approx(y(i)).epsilon(1e-14));
}

TEST_CASE("pchip preserves monotonicity between monotone knots") {
  Eigen::VectorXd x(5), y(5);
  x << 0.0, 0.5, 1.5, 3.0, 4.0;
  y << 0.0, 0.1, 2.0, 2.1, 5.0;
  const PchipInterpolant p(x, y);
  double prev = p(0.0);
  for (int i = 1; i <= 400; ++i) {
    const double v = p(4.0 * i / 400.0);
    CHECK(v >= prev - 1e-12);
    CHECK(v <= 5.0 + 1e-12);  // no overshoot
    prev = v;
  }
}

TEST_CASE("pchip clamps outside the knot range") {
  Eigen::VectorXd x(3), y(3);
  x << 1.0, 2.0, 3.0;
  y << 2.0, -1.0, 4.0;
  const PchipInterpolant p(x, y);
  CHECK(p(0.0) == doctest::Approx(2.0));
  CHECK(p(100.0) == doctest::Approx(4.0));
}

TEST_CASE("pchip rejects duplicate knots") {
  Eigen::VectorXd x(3), y(3);
  x << 0.0, 1.0, 1.0;
  y << 0.0, 1.0, 2.0;
  CHECK_THROWS_AS(PchipInterpolant(x, y), Error);
}
