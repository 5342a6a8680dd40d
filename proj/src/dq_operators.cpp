#include "dq/dq_operators.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "dq/errors.hpp"
#include "dq/linalg.hpp"

namespace dq {
namespace {

bool is_symmetric_set(const std::vector<double>& x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(x[i] + x[n - 1 - i] - 1.0) > 1e-14) return false;
  }
  return true;
}

void validate_points(const std::vector<double>& x) {
  if (x.size() < 2) {
    throw ParameterError("point set needs at least 2 points");
  }
  if (x.front() != 0.0 || x.back() != 1.0) {
    throw ParameterError("point set endpoints must be exactly 0 and 1");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      throw ParameterError("point set must be strictly increasing");
    }
  }
}

}  // namespace

PointSet chebyshev_lobatto_points(std::size_t n) {
  if (n < 2) {
    throw ParameterError("chebyshev_lobatto_points: n must be >= 2");
  }
  std::vector<double> x(n);
  // Fill symmetric pairs from one cosine evaluation so the symmetry
  // x_i + x_{n-1-i} = 1 holds to the last bit.
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double c = std::cos(std::numbers::pi * static_cast<double>(i) /
                              static_cast<double>(n - 1));
    x[i] = 0.5 * (1.0 - c);
    x[n - 1 - i] = 0.5 * (1.0 + c);
  }
  if (n % 2 == 1) x[n / 2] = 0.5;
  x.front() = 0.0;
  x.back() = 1.0;
  return {PointKind::chebyshev_lobatto, std::move(x), true};
}

PointSet uniform_points(std::size_t n) {
  if (n < 2) {
    throw ParameterError("uniform_points: n must be >= 2");
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    const double v = static_cast<double>(i) / static_cast<double>(n - 1);
    x[i] = v;
    x[n - 1 - i] = 1.0 - v;
  }
  if (n % 2 == 1) x[n / 2] = 0.5;
  return {PointKind::uniform, std::move(x), true};
}

PointSet explicit_point_set(std::vector<double> points) {
  validate_points(points);
  const bool sym = is_symmetric_set(points);
  return {PointKind::explicit_points, std::move(points), sym};
}

GridSpec::GridSpec(std::vector<PointSet> axes_in) : axes(std::move(axes_in)) {
  if (axes.empty()) {
    throw ParameterError("GridSpec: needs at least one axis");
  }
  for (const PointSet& ax : axes) {
    validate_points(ax.points);
    if (ax.size() < 3) {
      throw ParameterError("GridSpec: each axis needs at least 3 points");
    }
  }
}

DqOperator build_dq_operator(const PointSet& points) {
  const std::vector<double>& x = points.points;
  validate_points(x);
  const std::size_t n = x.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] - x[i - 1] < 1e-12) {
      throw IllConditionedGridError("build_dq_operator: points " + std::to_string(i - 1) +
                                    " and " + std::to_string(i) + " nearly coincide");
    }
  }

  // pi_prime[i] = prod_{k != i} (x_i - x_k).
  std::vector<double> pi_prime(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (k != i) pi_prime[i] *= x[i] - x[k];
    }
  }

  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double w = pi_prime[i] / ((x[i] - x[j]) * pi_prime[j]);
      a(i, j) = w;
      row_sum += w;
    }
    a(i, i) = -row_sum;  // exactness on constants
  }

  DenseMatrix b = matmul(a, a);
  return {std::move(a), std::move(b), points};
}

}  // namespace dq
