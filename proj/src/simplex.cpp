#include "infogeo/simplex.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "infogeo/errors.hpp"

namespace infogeo {

namespace {
using Idx = Eigen::Index;

void require_size(std::size_t n) {
  if (n < 2) throw DomainError("the simplex needs N >= 2 outcomes");
}
}  // namespace

SimplexPoint make_simplex_point(std::vector<double> probs, double floor) {
  require_size(probs.size());
  double sum = 0.0;
  for (double v : probs) {
    if (!std::isfinite(v) || !(v > floor)) {
      std::ostringstream os;
      os << "probability " << v << " is not above the floor " << floor;
      throw DomainError(os.str());
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "probabilities sum to " << sum << ", not 1";
    throw DomainError(os.str());
  }
  for (double& v : probs) v /= sum;
  return SimplexPoint{std::move(probs)};
}

std::string simplex_chart_label(std::size_t n) { return "simplex(" + std::to_string(n) + ")"; }

Chart simplex_chart(std::size_t n, double floor) {
  require_size(n);
  return Chart(
      n - 1,
      [floor](std::span<const double> q) {
        double last = 1.0;
        for (double c : q) {
          if (!(c > floor)) return false;
          last -= c;
        }
        return last > floor;
      },
      simplex_chart_label(n));
}

Point to_chart_point(const SimplexPoint& p) {
  return Point{std::vector<double>(p.probs.begin(), p.probs.end() - 1), simplex_chart_label(p.size())};
}

SimplexPoint from_chart_point(const Point& p) {
  return SimplexPoint{reconstruct_probabilities(std::span<const double>(p.coords))};
}

Mat simplex_frame_matrix(std::size_t n) {
  require_size(n);
  const auto d = static_cast<Idx>(n - 1);
  Mat x = Mat::Zero(d, d);
  for (Idx j = 0; j < d; ++j) {
    x(j, j) = 1.0;
    if (j + 1 < d) x(j, j + 1) = -1.0;
  }
  return x;
}

Frame simplex_frame(std::size_t n) {
  const Mat x = simplex_frame_matrix(n);
  const std::vector<double> rm = to_row_major(x);
  const Mat theta = x.transpose().inverse();
  return Frame::from_generic(
      "P", simplex_chart(n),
      [rm](auto q) {
        using T = std::remove_const_t<typename decltype(q)::value_type>;
        return std::vector<T>(rm.begin(), rm.end());
      },
      [theta](std::span<const double>) { return theta; });
}

Frame sheared_simplex_frame(std::size_t n) {
  const Mat base = simplex_frame_matrix(n);
  const std::vector<double> rm = to_row_major(base);
  const std::size_t d = n - 1;
  return Frame::from_generic("sheared-P", simplex_chart(n), [rm, d](auto q) {
    using T = std::remove_const_t<typename decltype(q)::value_type>;
    std::vector<T> x(rm.begin(), rm.end());
    for (std::size_t j = 0; j + 1 < d; ++j)
      for (std::size_t r = 0; r < d; ++r) x[j * d + r] = x[j * d + r] + q[j] * T(rm[(j + 1) * d + r]);
    return x;
  });
}

std::vector<double> p_field_ambient(std::size_t n, std::size_t j) {
  require_size(n);
  if (j + 1 >= n) throw DomainError("P-frame index out of range");
  std::vector<double> u(n, 0.0);
  u[j] = 1.0;
  u[j + 1] = -1.0;
  return u;
}

double fisher_rao_ambient(const SimplexPoint& p, std::span<const double> u, std::span<const double> v) {
  if (u.size() != p.size() || v.size() != p.size()) throw DomainError("tangent vectors have the wrong length");
  double s = 0.0;
  for (std::size_t r = 0; r < p.size(); ++r) s += u[r] * v[r] / p.probs[r];
  return s;
}

CovariantTensor2 fisher_rao_metric(const SimplexPoint& p) {
  const SimplexPoint checked = make_simplex_point(p.probs);
  const std::size_t d = checked.size() - 1;
  const auto& pr = checked.probs;
  Mat g = Mat::Zero(static_cast<Idx>(d), static_cast<Idx>(d));
  for (std::size_t j = 0; j < d; ++j) {
    g(static_cast<Idx>(j), static_cast<Idx>(j)) = 1.0 / pr[j] + 1.0 / pr[j + 1];
    if (j + 1 < d) {
      g(static_cast<Idx>(j), static_cast<Idx>(j + 1)) = -1.0 / pr[j + 1];
      g(static_cast<Idx>(j + 1), static_cast<Idx>(j)) = -1.0 / pr[j + 1];
    }
  }
  return CovariantTensor2{std::move(g), "P", to_chart_point(checked), Symmetry::symmetric};
}

CovariantTensor2 kl_metric_closed_form(const SimplexPoint& p) {
  const SimplexPoint checked = make_simplex_point(p.probs);
  const std::size_t d = checked.size() - 1;
  const auto& pr = checked.probs;
  Mat g = Mat::Zero(static_cast<Idx>(d), static_cast<Idx>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      double v = 0.0;
      if (j == k)
        v = 2.0 * (1.0 / pr[j] + 1.0 / pr[j + 1]);
      else if (k + 1 == j)
        v = -2.0 / pr[j];
      else if (j + 1 == k)
        v = -2.0 / pr[j + 1];
      g(static_cast<Idx>(j), static_cast<Idx>(k)) = v;
    }
  return CovariantTensor2{std::move(g), "P", to_chart_point(checked), Symmetry::symmetric};
}

}  // namespace infogeo
