#include "infogeo/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "infogeo/errors.hpp"

namespace infogeo {

namespace {
using Idx = Eigen::Index;

constexpr double kUnitarityTolerance = 1e-10;
constexpr double kDensityTolerance = 1e-12;
constexpr double kLogEigenvalueFloor = 1e-12;

void require_dimension(std::size_t n) {
  if (n < 2) throw DomainError("su(N) needs N >= 2");
}

CMat commutator(const CMat& a, const CMat& b) { return a * b - b * a; }

// Nonzero structure constants as (a, c, b, value), so that
// K_ab = Σ_c t^c c^a_cb is a sparse contraction.
struct SparseConstant {
  std::size_t a, c, b;
  double value;
};

std::vector<SparseConstant> sparse_constants(const StructureConstants& f) {
  std::vector<SparseConstant> out;
  const std::size_t n = f.dimension();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t b = 0; b < n; ++b) {
        const double v = f(a, c, b);
        if (std::abs(v) > 1e-14) out.push_back({a, c, b, v});
      }
  return out;
}

// Coefficients of the left-invariant fields in exponential coordinates:
// Θ(t) = Φ(ad_T) with Φ(x) = (1 − e^{−x})/x, X = (Θ⁻¹)ᵀ.
template <typename T>
std::vector<T> phi_of_ad(std::span<const T> t, const std::vector<SparseConstant>& consts, std::size_t n) {
  std::vector<T> k(n * n, T(0.0));
  for (const auto& s : consts) k[s.a * n + s.b] = k[s.a * n + s.b] + T(s.value) * t[s.c];

  std::vector<T> phi(n * n, T(0.0));
  std::vector<T> term(n * n, T(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    phi[i * n + i] = T(1.0);
    term[i * n + i] = T(1.0);
  }
  std::vector<T> next(n * n);
  for (int order = 1; order <= 40; ++order) {
    // term_k = term_{k-1} · (−K) / (k+1)
    const T scale = T(-1.0 / (order + 1));
    double size = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        T acc = T(0.0);
        for (std::size_t m = 0; m < n; ++m) acc = acc + term[i * n + m] * k[m * n + j];
        next[i * n + j] = scale * acc;
        size = std::max(size, magnitude(next[i * n + j]));
      }
    term.swap(next);
    for (std::size_t i = 0; i < n * n; ++i) phi[i] = phi[i] + term[i];
    if (size < 1e-18 && order >= 3) break;
  }
  return phi;
}

template <typename T>
std::vector<T> left_invariant_coeffs(std::span<const T> t, const std::vector<SparseConstant>& consts, std::size_t n) {
  const std::vector<T> inv = invert_row_major(phi_of_ad(t, consts, n), n);
  std::vector<T> x(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i * n + j] = inv[j * n + i];
  return x;
}

bool in_exp_ball(std::span<const double> t) {
  double s = 0.0;
  for (double v : t) s += v * v;
  return std::sqrt(s) < kExpChartRadius;
}

Mat coframe_at(std::span<const double> t, const std::vector<SparseConstant>& consts, std::size_t n) {
  return to_mat(phi_of_ad(t, consts, n), n);
}
}  // namespace

GellMannBasis gell_mann_basis(std::size_t n) {
  require_dimension(n);
  GellMannBasis basis;
  basis.n = n;
  const auto m = static_cast<Idx>(n);
  const double r2 = 1.0 / std::sqrt(2.0);
  const cplx i(0.0, 1.0);

  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t mu = j + 1; mu <= n; ++mu) {
      CMat g = CMat::Zero(m, m);
      g(static_cast<Idx>(j - 1), static_cast<Idx>(mu - 1)) = i * r2;
      g(static_cast<Idx>(mu - 1), static_cast<Idx>(j - 1)) = i * r2;
      basis.generators.push_back(
          {std::move(g), GeneratorKind::symmetric, j, mu, "lambda_" + std::to_string(j) + std::to_string(mu)});
    }
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t mu = j + 1; mu <= n; ++mu) {
      CMat g = CMat::Zero(m, m);
      g(static_cast<Idx>(j - 1), static_cast<Idx>(mu - 1)) = -r2;
      g(static_cast<Idx>(mu - 1), static_cast<Idx>(j - 1)) = r2;
      basis.generators.push_back(
          {std::move(g), GeneratorKind::antisymmetric, j, mu, "sigma_" + std::to_string(j) + std::to_string(mu)});
    }
  for (std::size_t j = 1; j < n; ++j) {
    const double alpha = 1.0 / std::sqrt(static_cast<double>(j * (j + 1)));
    CMat g = CMat::Zero(m, m);
    for (std::size_t r = 1; r <= j; ++r) g(static_cast<Idx>(r - 1), static_cast<Idx>(r - 1)) = -i * alpha;
    g(static_cast<Idx>(j), static_cast<Idx>(j)) = i * alpha * static_cast<double>(j);
    basis.generators.push_back({std::move(g), GeneratorKind::cartan, j, j + 1, "e_" + std::to_string(j)});
  }
  return basis;
}

StructureConstants structure_constants(const GellMannBasis& basis) {
  const std::size_t d = basis.size();
  std::vector<double> c(d * d * d, 0.0);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t cc = b + 1; cc < d; ++cc) {
      const CMat br = commutator(basis[b], basis[cc]);
      for (std::size_t a = 0; a < d; ++a) {
        const double v = -(basis[a] * br).trace().real();
        c[(a * d + b) * d + cc] = v;
        c[(a * d + cc) * d + b] = -v;
      }
    }
  return StructureConstants(d, std::move(c));
}

DensityMatrix make_density_matrix(CMat rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) throw DomainError("density matrix must be square");
  if (!rho.allFinite()) throw DomainError("density matrix has non-finite entries");
  if (cmax_abs(rho - rho.adjoint()) > kDensityTolerance) throw DomainError("density matrix is not Hermitian");
  const cplx tr = rho.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kDensityTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace is " << tr.real() << ", not 1";
    throw DomainError(os.str());
  }
  const CMat h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues().minCoeff() > 0.0)) throw DomainError("density matrix is not positive definite");
  return DensityMatrix{h};
}

UnfoldedQuantumPoint make_unfolded_point(CMat u, SimplexPoint p) {
  const auto n = u.rows();
  if (u.cols() != n || static_cast<std::size_t>(n) != p.size()) throw DomainError("U and p dimensions differ");
  if (!u.allFinite()) throw DomainError("U has non-finite entries");
  if (cmax_abs(u.adjoint() * u - CMat::Identity(n, n)) > kUnitarityTolerance) throw DomainError("U is not unitary");
  if (std::abs(u.determinant() - cplx(1.0, 0.0)) > kUnitarityTolerance) throw DomainError("det U is not 1");
  SimplexPoint checked = make_simplex_point(std::move(p.probs));
  return UnfoldedQuantumPoint{std::move(u), std::move(checked)};
}

DensityMatrix unfold(const UnfoldedQuantumPoint& pt) {
  const auto n = static_cast<Idx>(pt.p.size());
  Vec pv(n);
  for (Idx r = 0; r < n; ++r) pv(r) = pt.p.probs[static_cast<std::size_t>(r)];
  const CMat rho = pt.u * pv.cast<cplx>().asDiagonal() * pt.u.adjoint();
  return make_density_matrix(0.5 * (rho + rho.adjoint()));
}

CMat matrix_log_pd(const CMat& h) {
  if (h.rows() != h.cols()) throw DomainError("matrix_log_pd needs a square matrix");
  const double scale = std::max(1.0, cmax_abs(h));
  if (cmax_abs(h - h.adjoint()) > 1e-12 * scale) throw DomainError("matrix_log_pd needs a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()));
  const Vec& ev = es.eigenvalues();
  if (!(ev.minCoeff() > kLogEigenvalueFloor)) {
    std::ostringstream os;
    os << "eigenvalue " << ev.minCoeff() << " is below the logarithm floor " << kLogEigenvalueFloor;
    throw DomainError(os.str());
  }
  const Vec logs = ev.array().log().matrix();
  return es.eigenvectors() * logs.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

CMat expm_antihermitian(const CMat& a) {
  if (a.rows() != a.cols()) throw DomainError("expm_antihermitian needs a square matrix");
  const double scale = std::max(1.0, cmax_abs(a));
  if (cmax_abs(a + a.adjoint()) > 1e-12 * scale) throw DomainError("matrix is not anti-Hermitian");
  const cplx i(0.0, 1.0);
  const CMat h = i * a;
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()));
  // a = −i h, so exp(a) = V diag(e^{−iμ}) V†.
  CVec phases(es.eigenvalues().size());
  for (Idx k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, -es.eigenvalues()(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMat lie_algebra_element(const GellMannBasis& basis, std::span<const double> t) {
  if (t.size() != basis.size()) throw DomainError("coefficient vector has the wrong length");
  const auto m = static_cast<Idx>(basis.n);
  CMat out = CMat::Zero(m, m);
  for (std::size_t a = 0; a < t.size(); ++a) out += t[a] * basis[a];
  return out;
}

std::string su_chart_label(std::size_t n) { return "su(" + std::to_string(n) + ")-exp"; }
std::string su_times_simplex_label(std::size_t n) { return "su(" + std::to_string(n) + ")-exp x simplex(" + std::to_string(n) + ")"; }

ChartWithFrame su_chart_at(const CMat& u0, const GellMannBasis& basis) {
  require_dimension(basis.n);
  if (u0.rows() != static_cast<Idx>(basis.n) || u0.cols() != u0.rows()) throw DomainError("U0 has the wrong size");
  const auto n = static_cast<Idx>(basis.n);
  if (cmax_abs(u0.adjoint() * u0 - CMat::Identity(n, n)) > kUnitarityTolerance ||
      std::abs(u0.determinant() - cplx(1.0, 0.0)) > kUnitarityTolerance)
    throw DomainError("chart centre is not special unitary");

  const std::size_t d = basis.size();
  Chart chart(
      d, [](std::span<const double> t) { return in_exp_ball(t); }, su_chart_label(basis.n));
  const auto consts = sparse_constants(structure_constants(basis));
  Frame frame = Frame::from_generic(
      "gell-mann", chart,
      [consts, d](auto t) {
        using T = std::remove_const_t<typename decltype(t)::value_type>;
        return left_invariant_coeffs<T>(t, consts, d);
      },
      [consts, d](std::span<const double> t) { return coframe_at(t, consts, d); });
  return ChartWithFrame{std::move(chart), std::move(frame)};
}

CMat su_chart_point(const CMat& u0, const GellMannBasis& basis, std::span<const double> t) {
  if (!in_exp_ball(t)) throw DomainError("point lies outside the exponential chart");
  return u0 * expm_antihermitian(lie_algebra_element(basis, t));
}

ChartWithFrame product_chart(const GellMannBasis& basis) {
  require_dimension(basis.n);
  const std::size_t n = basis.n;
  const std::size_t dq = basis.size();
  const std::size_t dc = n - 1;
  const std::size_t d = dq + dc;
  const Chart simplex = simplex_chart(n);

  Chart chart(
      d,
      [dq, simplex](std::span<const double> x) {
        return in_exp_ball(x.subspan(0, dq)) && simplex.contains(x.subspan(dq));
      },
      su_times_simplex_label(n));

  const auto consts = sparse_constants(structure_constants(basis));
  const std::vector<double> p_rows = to_row_major(simplex_frame_matrix(n));
  const Mat p_coframe = simplex_frame_matrix(n).transpose().inverse();

  Frame frame = Frame::from_generic(
      "gell-mann+P", chart,
      [consts, p_rows, dq, dc, d](auto x) {
        using T = std::remove_const_t<typename decltype(x)::value_type>;
        const std::vector<T> q = left_invariant_coeffs<T>(x.subspan(0, dq), consts, dq);
        std::vector<T> out(d * d, T(0.0));
        for (std::size_t i = 0; i < dq; ++i)
          for (std::size_t j = 0; j < dq; ++j) out[i * d + j] = q[i * dq + j];
        for (std::size_t i = 0; i < dc; ++i)
          for (std::size_t j = 0; j < dc; ++j) out[(dq + i) * d + dq + j] = T(p_rows[i * dc + j]);
        return out;
      },
      [consts, p_coframe, dq, dc, d](std::span<const double> x) {
        Mat theta = Mat::Zero(static_cast<Idx>(d), static_cast<Idx>(d));
        theta.topLeftCorner(static_cast<Idx>(dq), static_cast<Idx>(dq)) = coframe_at(x.subspan(0, dq), consts, dq);
        theta.bottomRightCorner(static_cast<Idx>(dc), static_cast<Idx>(dc)) = p_coframe;
        return theta;
      });
  return ChartWithFrame{std::move(chart), std::move(frame)};
}

UnfoldedQuantumPoint product_chart_point(const CMat& u0, const GellMannBasis& basis, const Point& p) {
  const std::size_t dq = basis.size();
  if (p.coords.size() != dq + basis.n - 1) throw DomainError("product-chart point has the wrong length");
  const std::span<const double> all(p.coords);
  const CMat u = su_chart_point(u0, basis, all.subspan(0, dq));
  SimplexPoint sp{reconstruct_probabilities(all.subspan(dq))};
  return make_unfolded_point(u, std::move(sp));
}

double min_eigenvalue_gap(const SimplexPoint& p) {
  std::vector<double> s = p.probs;
  std::sort(s.begin(), s.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t r = 1; r < s.size(); ++r) gap = std::min(gap, s[r] - s[r - 1]);
  return gap;
}

CovariantTensor2 umegaki_metric_closed_form(const SimplexPoint& p, const GellMannBasis& basis) {
  const SimplexPoint checked = make_simplex_point(p.probs);
  const std::size_t n = checked.size();
  if (n != basis.n) throw DomainError("basis and probability vector dimensions differ");
  if (min_eigenvalue_gap(checked) < kDistinctEigenvalueGap)
    throw PreconditionError("probability entries are not pairwise distinct (gap below 1e-6)");

  const auto m = static_cast<Idx>(n);
  const std::size_t dq = basis.size();
  const std::size_t dc = n - 1;
  CMat rho0 = CMat::Zero(m, m);
  CMat log_rho0 = CMat::Zero(m, m);
  CMat rho0_inv = CMat::Zero(m, m);
  for (Idx r = 0; r < m; ++r) {
    const double pr = checked.probs[static_cast<std::size_t>(r)];
    rho0(r, r) = pr;
    log_rho0(r, r) = std::log(pr);
    rho0_inv(r, r) = 1.0 / pr;
  }

  Mat g = Mat::Zero(static_cast<Idx>(dq + dc), static_cast<Idx>(dq + dc));
  for (std::size_t a = 0; a < dq; ++a) {
    const CMat left = commutator(rho0, basis[a]);
    for (std::size_t b = 0; b < dq; ++b)
      g(static_cast<Idx>(a), static_cast<Idx>(b)) = -2.0 * (left * commutator(basis[b], log_rho0)).trace().real();
  }

  // Classical block 2 Tr(ρ₀⁻¹ D_j D_k) with D_j the diagonal matrix of the
  // ambient P-field j.
  for (std::size_t j = 0; j < dc; ++j) {
    const std::vector<double> uj = p_field_ambient(n, j);
    for (std::size_t k = 0; k < dc; ++k) {
      const std::vector<double> uk = p_field_ambient(n, k);
      CMat dj = CMat::Zero(m, m);
      CMat dk = CMat::Zero(m, m);
      for (Idx r = 0; r < m; ++r) {
        dj(r, r) = uj[static_cast<std::size_t>(r)];
        dk(r, r) = uk[static_cast<std::size_t>(r)];
      }
      g(static_cast<Idx>(dq + j), static_cast<Idx>(dq + k)) = 2.0 * (rho0_inv * dj * dk).trace().real();
    }
  }

  std::vector<double> coords(dq, 0.0);
  coords.insert(coords.end(), checked.probs.begin(), checked.probs.end() - 1);
  return CovariantTensor2{std::move(g), "gell-mann+P", Point{std::move(coords), su_times_simplex_label(n)},
                          Symmetry::symmetric};
}

}  // namespace infogeo
