#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "pgreedy/errors.hpp"
#include "pgreedy/rates.hpp"

using namespace pgreedy;

namespace {

GreedyTrace synthetic(std::size_t len, const std::function<double(double)>& power,
                      const std::function<double(double)>& fill = {}) {
  GreedyTrace t;
  t.kernel = KernelSpec::gaussian(1.0, 1);
  for (std::size_t n = 1; n <= len; ++n) {
    TraceRow row;
    row.n = n;
    row.selected_index = n - 1;
    row.max_power = power(static_cast<double>(n));
    if (fill) row.fill_distance = fill(static_cast<double>(n));
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace

TEST_CASE("fit_algebraic recovers exact power laws") {
  const auto t = synthetic(200, [](double n) { return 0.08 * std::pow(n, -2.0); });
  const auto fit = fit_algebraic(t, {10, 200});
  CHECK(fit.model == RateModel::Algebraic);
  CHECK(std::abs(fit.c - 0.08) <= 1e-10);
  CHECK(std::abs(fit.rate + 2.0) <= 1e-10);
  CHECK(std::abs(fit.r_squared - 1.0) <= 1e-12);
  CHECK(fit.window.n_min == 10);
  CHECK(fit.window.n_max == 200);

  const auto flat = fit_algebraic(synthetic(20, [](double) { return 0.3; }), {1, 20});
  CHECK(std::abs(flat.rate) <= 1e-12);
  CHECK(std::abs(flat.c - 0.3) <= 1e-12);
}

TEST_CASE("fit_exponential recovers exact exponential laws") {
  const auto d1 = synthetic(30, [](double n) { return 3.47 * std::exp(-1.22 * n); });
  const auto f1 = fit_exponential(d1, 1, {1, 25});
  CHECK(f1.model == RateModel::Exponential);
  CHECK(std::abs(f1.c - 3.47) <= 1e-10);
  CHECK(std::abs(f1.rate - 1.22) <= 1e-10);

  const auto d2 = synthetic(300, [](double n) { return 5.10 * std::exp(-1.80 * std::sqrt(n)); });
  const auto f2 = fit_exponential(d2, 2, {10, 300});
  CHECK(std::abs(f2.c - 5.10) <= 1e-10);
  CHECK(std::abs(f2.rate - 1.80) <= 1e-10);
  CHECK(std::abs(f2.r_squared - 1.0) <= 1e-12);
  CHECK(f2(100.0) == doctest::Approx(5.10 * std::exp(-18.0)));
}

TEST_CASE("fit_fill_decay") {
  auto t = synthetic(100, [](double) { return 1.0; }, [](double n) { return std::pow(n, -0.5); });
  CHECK(std::abs(fit_fill_decay(t, {1, 100}).rate + 0.5) <= 1e-12);
  t = synthetic(100, [](double) { return 1.0; }, [](double n) { return 2.0 / n; });
  const auto f = fit_fill_decay(t, {5, 100});
  CHECK(std::abs(f.c - 2.0) <= 1e-10);
  CHECK(std::abs(f.rate + 1.0) <= 1e-10);

  const auto no_fill = synthetic(10, [](double n) { return 1.0 / n; });
  CHECK_THROWS_AS(fit_fill_decay(no_fill, {1, 10}), InputError);
}

TEST_CASE("fit errors") {
  const auto t = synthetic(10, [](double n) { return 1.0 / n; });
  CHECK_THROWS_AS(fit_algebraic(t, {3, 4}), InsufficientData);
  CHECK_THROWS_AS(fit_algebraic(t, {5, 11}), InputError);
  CHECK_THROWS_AS(fit_algebraic(t, {0, 5}), InputError);
  const auto zero = synthetic(10, [](double n) { return n < 5 ? 1.0 : 0.0; });
  CHECK_THROWS_AS(fit_algebraic(zero, {1, 10}), InputError);
}

TEST_CASE("property: fits are invariant under scaling of the data") {
  for (double scale : {1e-6, 0.37, 12.0, 4e5}) {
    const auto base = synthetic(80, [](double n) { return 0.5 * std::pow(n, -1.3) * (1.0 + 0.1 * std::sin(n)); });
    const auto scaled = synthetic(80, [scale](double n) { return scale * 0.5 * std::pow(n, -1.3) * (1.0 + 0.1 * std::sin(n)); });
    const auto a = fit_algebraic(base, {5, 80}), b = fit_algebraic(scaled, {5, 80});
    CHECK(b.rate == doctest::Approx(a.rate).epsilon(1e-12));
    CHECK(b.c == doctest::Approx(scale * a.c).epsilon(1e-10));
    CHECK(b.r_squared == doctest::Approx(a.r_squared).epsilon(1e-10));

    const auto e = fit_exponential(base, 2, {5, 80}), f = fit_exponential(scaled, 2, {5, 80});
    CHECK(f.rate == doctest::Approx(e.rate).epsilon(1e-12));
    CHECK(f.c == doctest::Approx(scale * e.c).epsilon(1e-10));
  }
}

TEST_CASE("default_window drops burn-in and the cancellation tail") {
  auto t = synthetic(40, [](double n) { return std::exp(-n); });
  t.stop.tol_sq = 1e-15;
  const auto w = default_window(t);
  CHECK(w.n_min == 11);
  // exp(-2n) >= 1e-13 <=> n <= 14.97
  CHECK(w.n_max == 14);
}

TEST_CASE("bound_constants") {
  const auto k = bound_constants(1.0, 2.0, 8.0, 2.0, 2);
  CHECK(k.hat_c2 == doctest::Approx(2.0));
  CHECK(k.hat_c3 == doctest::Approx(2.0));
  CHECK(bound_constants(1.0, 1.0, 1.0, 2.0, 1).hat_c1 == doctest::Approx(362.03867196751236));

  const auto base = bound_constants(0.5, 0.5, 0.5, 3.0, 3);
  const auto more = bound_constants(0.6, 0.6, 0.6, 3.0, 3);
  CHECK(more.hat_c1 > base.hat_c1);
  CHECK(more.hat_c2 > base.hat_c2);
  CHECK(more.hat_c3 > base.hat_c3);
}

TEST_CASE("theoretical_curve") {
  const std::vector<double> n4{4.0};
  CHECK(theoretical_curve(SmoothnessClass::finite(2.0), 1, {1.0, 1.0}, n4)[0] == doctest::Approx(0.125));
  const std::vector<double> n0{0.0};
  CHECK(theoretical_curve(SmoothnessClass::infinitely_smooth(), 1, {1.0, 1.0}, n0)[0] == 1.0);
  const std::vector<double> n1000{1000.0};
  CHECK(theoretical_curve(SmoothnessClass::finite(3.0), 3, {0.67, 1.0}, n1000, CurveKind::Improved)[0] ==
        doctest::Approx(0.67e-3));
  CHECK(algebraic_exponent(2.0, 2, CurveKind::Theoretical) == doctest::Approx(-0.5));
  CHECK(algebraic_exponent(2.0, 2, CurveKind::Improved) == doctest::Approx(-1.0));
}

TEST_CASE("fit_prefactor") {
  std::vector<double> n, v;
  for (int i = 1; i <= 20; ++i) {
    n.push_back(i);
    v.push_back(0.34 * std::pow(i, -1.0));
  }
  CHECK(fit_prefactor(n, v, -1.0) == doctest::Approx(0.34).epsilon(1e-12));
}

TEST_CASE("reference tables") {
  CHECK(gaussian_reference(1)->hat_c2 == 3.47);
  CHECK(gaussian_reference(3)->hat_c3 == 2.31);
  CHECK_FALSE(gaussian_reference(4));
  CHECK(*wendland_reference_c1(2, 2, CurveKind::Improved) == 0.34);
  CHECK(*wendland_reference_c1(3, 1, CurveKind::Theoretical) == 0.03);
  CHECK_FALSE(wendland_reference_c1(4, 1, CurveKind::Improved));
}

TEST_CASE("summary rows") {
  std::ostringstream out;
  write_summary_row(out, {"gaussian", 2, "inf", "exponential", {RateModel::Exponential, 5.1, 1.8, 2, {10, 20}, 0.99}});
  CHECK(out.str() == "gaussian,2,inf,exponential,5.0999999999999996,1.8,10,20,0.98999999999999999\n");
}
