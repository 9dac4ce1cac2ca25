#ifndef TYFAM_ESTIMATION_HPP
#define TYFAM_ESTIMATION_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tyfam {

/// (6/5) (2 pi)^{3/2} e^{(n-7)^2 / 2}, the growth estimate for |F(K_n)|.
inline double f_estimate(int n) {
  if (n < 1)
    throw std::invalid_argument("f_estimate needs n >= 1");
  const double d = n - 7;
  return 1.2 * std::pow(2.0 * std::numbers::pi, 1.5) * std::exp(d * d / 2.0);
}

/// (8/3) e^{3y/5}, proposed upper bound for |F(K_{3,y+3})|.
inline double k3y_upper(int y) {
  if (y < 0)
    throw std::invalid_argument("k3y_upper needs y >= 0");
  return 8.0 / 3.0 * std::exp(0.6 * y);
}

/// (16/3) e^{2c/3}, proposed lower bound for |F(K_{1,2,c+3})|.
inline double k12c_lower(int c) {
  if (c < 0)
    throw std::invalid_argument("k12c_lower needs c >= 0");
  return 16.0 / 3.0 * std::exp(2.0 * c / 3.0);
}

/// Sum of the last `arity` terms (3 for K_{3,y}, 4 for K_{1,2,c}).
inline std::uint64_t recursion_projection(std::span<const std::uint64_t> series, int arity) {
  if (arity != 3 && arity != 4)
    throw std::invalid_argument("recursion arity must be 3 or 4");
  if (series.size() < static_cast<std::size_t>(arity))
    throw std::invalid_argument("series shorter than the recursion arity");
  return std::accumulate(series.end() - arity, series.end(), std::uint64_t{0});
}

enum class FitModel { gaussian, exponential };

/// gaussian: params = {amplitude, mean, sigma}; exponential: params = {a, b}.
struct FitResult {
  FitModel model = FitModel::gaussian;
  std::vector<double> params;
  double residual = 0.0;  // sum of squared errors in count space
};

using Point = std::pair<double, double>;

namespace detail {

struct GaussNewtonConfig {
  int max_iterations = 200;
  double tolerance = 1e-10;
};

// Minimizes sum_k (model(x_k; p) - y_k)^2. `eval` fills the model values and
// the Jacobian for a parameter vector. Steps that raise the residual are
// halved; the iteration is fully deterministic.
template <typename Eval>
double gauss_newton(std::span<const Point> pts, Eigen::VectorXd& p, Eval eval,
                    GaussNewtonConfig cfg = {}) {
  const auto m = static_cast<Eigen::Index>(pts.size());
  Eigen::VectorXd model(m), r(m);
  Eigen::MatrixXd jac(m, p.size());
  auto sse = [&](const Eigen::VectorXd& q) {
    Eigen::MatrixXd unused(m, q.size());
    eval(q, model, unused);
    double s = 0;
    for (Eigen::Index k = 0; k < m; ++k) {
      const double d = model[k] - pts[static_cast<std::size_t>(k)].second;
      s += d * d;
    }
    return s;
  };
  double current = sse(p);
  for (int it = 0; it < cfg.max_iterations; ++it) {
    eval(p, model, jac);
    for (Eigen::Index k = 0; k < m; ++k)
      r[k] = model[k] - pts[static_cast<std::size_t>(k)].second;
    Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-r);
    if (!step.allFinite())
      break;
    double scale = 1.0;
    Eigen::VectorXd trial = p + step;
    double next = sse(trial);
    for (int h = 0; h < 40 && !(next <= current); ++h) {
      scale *= 0.5;
      trial = p + scale * step;
      next = sse(trial);
    }
    if (!(next <= current))
      break;
    p = trial;
    current = next;
    if ((scale * step).lpNorm<Eigen::Infinity>() < cfg.tolerance)
      break;
  }
  return current;
}

} // namespace detail

/**
 * Least-squares fit of A e^{-(x-mu)^2 / 2 sigma^2} to (x, count) points.
 * Starts from the count-weighted mean and standard deviation with A at the
 * largest count, then runs Gauss-Newton.
 */
inline FitResult gaussian_fit(std::span<const Point> pts) {
  std::size_t nonzero = 0;
  double weight = 0, mean = 0, peak = 0;
  for (auto [x, y] : pts) {
    if (y < 0)
      throw std::invalid_argument("gaussian_fit: negative count");
    if (y > 0)
      ++nonzero;
    weight += y;
    mean += x * y;
    peak = std::max(peak, y);
  }
  if (nonzero < 3)
    throw std::invalid_argument("gaussian_fit needs at least 3 nonzero buckets");
  mean /= weight;
  double var = 0;
  for (auto [x, y] : pts)
    var += y * (x - mean) * (x - mean);
  var /= weight;

  Eigen::VectorXd p(3);
  p << peak, mean, std::sqrt(var);
  auto eval = [&](const Eigen::VectorXd& q, Eigen::VectorXd& model, Eigen::MatrixXd& jac) {
    const double a = q[0], mu = q[1], s = q[2];
    for (Eigen::Index k = 0; k < model.size(); ++k) {
      const double d = pts[static_cast<std::size_t>(k)].first - mu;
      const double e = std::exp(-d * d / (2 * s * s));
      model[k] = a * e;
      jac(k, 0) = e;
      jac(k, 1) = a * e * d / (s * s);
      jac(k, 2) = a * e * d * d / (s * s * s);
    }
  };
  const double residual = detail::gauss_newton(pts, p, eval);
  return {FitModel::gaussian, {p[0], p[1], std::abs(p[2])}, residual};
}

inline FitResult gaussian_fit(const std::map<std::size_t, std::size_t>& histogram) {
  std::vector<Point> pts;
  for (auto [order, count] : histogram)
    pts.emplace_back(static_cast<double>(order), static_cast<double>(count));
  return gaussian_fit(pts);
}

/**
 * Least-squares fit of a e^{bx} to positive (x, value) points. The
 * log-linear regression seeds a Gauss-Newton refinement on the raw values.
 */
inline FitResult exp_fit(std::span<const Point> pts) {
  if (pts.size() < 2)
    throw std::invalid_argument("exp_fit needs at least 2 points");
  double sx = 0, sy = 0;
  for (auto [x, y] : pts) {
    if (!(y > 0))
      throw std::invalid_argument("exp_fit needs positive values");
    sx += x;
    sy += std::log(y);
  }
  const double n = static_cast<double>(pts.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (std::log(y) - my);
  }
  if (sxx == 0)
    throw std::invalid_argument("exp_fit needs at least 2 distinct x values");
  const double b0 = sxy / sxx;
  Eigen::VectorXd p(2);
  p << std::exp(my - b0 * mx), b0;

  auto eval = [&](const Eigen::VectorXd& q, Eigen::VectorXd& model, Eigen::MatrixXd& jac) {
    for (Eigen::Index k = 0; k < model.size(); ++k) {
      const double x = pts[static_cast<std::size_t>(k)].first;
      const double e = std::exp(q[1] * x);
      model[k] = q[0] * e;
      jac(k, 0) = e;
      jac(k, 1) = q[0] * x * e;
    }
  };
  const double residual = detail::gauss_newton(pts, p, eval);
  return {FitModel::exponential, {p[0], p[1]}, residual};
}

} // namespace tyfam

#endif
