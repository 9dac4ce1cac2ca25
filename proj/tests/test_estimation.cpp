#include <tyfam/estimation.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace tyfam;

TEST(Estimates, GrowthFormula) {
  EXPECT_NEAR(f_estimate(8), 31.2, 0.05);
  EXPECT_NEAR(f_estimate(10), 1701.3, 0.1);
  EXPECT_NEAR(f_estimate(7), 1.2 * std::pow(2 * std::numbers::pi, 1.5), 1e-12);
  EXPECT_NEAR(f_estimate(7), 18.9, 0.01);
  EXPECT_THROW(f_estimate(0), std::invalid_argument);
}

TEST(Estimates, TableWithinTwoTenthsPercent) {
  const std::pair<int, double> table[] = {
      {8, 31.2}, {9, 139.7}, {10, 1701.3}, {11, 56338.7}, {12, 5071450}};
  for (auto [n, value] : table)
    EXPECT_LT(std::abs(f_estimate(n) - value) / value, 0.002) << n;
}

TEST(Estimates, ExponentialBounds) {
  EXPECT_NEAR(k3y_upper(0), 8.0 / 3.0, 1e-15);
  EXPECT_NEAR(k3y_upper(4), 29.4, 0.05);
  EXPECT_GT(k3y_upper(4), 29.0);
  EXPECT_NEAR(k3y_upper(10), 1075.8, 0.1);
  EXPECT_NEAR(k12c_lower(0), 16.0 / 3.0, 1e-15);
  EXPECT_NEAR(k12c_lower(1), 10.39, 0.01);
  EXPECT_LT(k12c_lower(1), 14.0);
  EXPECT_NEAR(k12c_lower(7), 567.16, 0.01);
  EXPECT_LT(k12c_lower(7), 581.0);
}

TEST(Recursion, Projection) {
  const std::vector<std::uint64_t> a{6, 10, 17};
  EXPECT_EQ(recursion_projection(a, 3), 33u);
  const std::vector<std::uint64_t> b{2, 17, 29, 52};
  EXPECT_EQ(recursion_projection(b, 3), 98u);
  const std::vector<std::uint64_t> c{5, 5, 5};
  EXPECT_EQ(recursion_projection(c, 3), 15u);
  EXPECT_THROW(recursion_projection(c, 4), std::invalid_argument);
  EXPECT_THROW(recursion_projection(c, 2), std::invalid_argument);
}

TEST(GaussianFit, SymmetricHistogramCentersExactly) {
  const std::vector<Point> pts{{9, 1}, {10, 2}, {11, 1}};
  auto r = gaussian_fit(pts);
  EXPECT_EQ(r.model, FitModel::gaussian);
  EXPECT_NEAR(r.params[1], 10.0, 1e-12);
  EXPECT_GT(r.params[2], 0.0);
}

TEST(GaussianFit, RecoversExactSamples) {
  const double amp = 120.0, mu = 16.3, sigma = 1.7;
  std::vector<Point> pts;
  for (int v = 10; v <= 23; ++v)
    pts.emplace_back(v, amp * std::exp(-(v - mu) * (v - mu) / (2 * sigma * sigma)));
  auto r = gaussian_fit(pts);
  EXPECT_NEAR(r.params[0], amp, 1e-6);
  EXPECT_NEAR(r.params[1], mu, 1e-6);
  EXPECT_NEAR(r.params[2], sigma, 1e-6);
  EXPECT_NEAR(r.residual, 0.0, 1e-12);
  auto again = gaussian_fit(pts);
  EXPECT_EQ(again.params, r.params);
}

TEST(GaussianFit, RejectsDegenerateInput) {
  const std::vector<Point> two{{1, 3}, {2, 4}, {3, 0}};
  EXPECT_THROW(gaussian_fit(two), std::invalid_argument);
  std::map<std::size_t, std::size_t> h{{4, 1}, {5, 2}};
  EXPECT_THROW(gaussian_fit(h), std::invalid_argument);
}

TEST(ExpFit, RecoversExactPoints) {
  std::vector<Point> pts;
  for (int x = 0; x < 10; ++x)
    pts.emplace_back(x, 2.5 * std::exp(0.7 * x));
  auto r = exp_fit(pts);
  EXPECT_NEAR(r.params[0], 2.5, 1e-9);
  EXPECT_NEAR(r.params[1], 0.7, 1e-9);
}

TEST(ExpFit, ReproducesKnownConstants) {
  const double k3y[] = {6, 10, 17, 29, 52, 94, 172, 315, 578, 1061, 1941, 3533, 6408};
  std::vector<Point> pts;
  for (int y = 4; y <= 16; ++y)
    pts.emplace_back(y - 3, k3y[y - 4]);
  auto r = exp_fit(pts);
  EXPECT_NEAR(r.params[0], 2.68, 0.005);
  EXPECT_NEAR(r.params[1], 0.599, 0.0005);

  const double k12c[] = {14, 22, 40, 78, 153, 299, 581};
  pts.clear();
  for (int c = 4; c <= 10; ++c)
    pts.emplace_back(c - 3, k12c[c - 4]);
  r = exp_fit(pts);
  EXPECT_NEAR(r.params[0], 5.5, 0.01);
  EXPECT_NEAR(r.params[1], 0.67, 0.005);
}

TEST(ExpFit, RejectsBadInput) {
  const std::vector<Point> one{{1, 2}};
  EXPECT_THROW(exp_fit(one), std::invalid_argument);
  const std::vector<Point> nonpos{{1, 2}, {2, 0}};
  EXPECT_THROW(exp_fit(nonpos), std::invalid_argument);
  const std::vector<Point> same_x{{1, 2}, {1, 3}};
  EXPECT_THROW(exp_fit(same_x), std::invalid_argument);
}
