#include "sbpmhd/sbp_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sbpmhd {

namespace {

struct LegendreEval {
  double p;   // P_N(x)
  double dp;  // P_N'(x)
};

LegendreEval legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  // P_N' from the three-term identity (1 - x^2) P_N' = N (P_{N-1} - x P_N);
  // only used away from the endpoints.
  const double dp = (std::fabs(1.0 - x * x) > 0.0) ? n * (p0 - x * p1) / (1.0 - x * x) : 0.0;
  return {p1, dp};
}

void fill_derived(SbpOperator1D& op) {
  const std::size_t n = op.nodes.size();
  op.Q = DenseMatrix(n);
  op.S = DenseMatrix(n);
  op.B = DenseMatrix(n);
  op.B(0, 0) = -1.0;
  op.B(n - 1, n - 1) = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.Q(i, j) = op.weights[i] * op.D(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.S(i, j) = op.Q(i, j) - op.Q(j, i);
}

}  // namespace

int SbpOperator1D::exact_degree_all_rows() const {
  return kind == OperatorKind::LGL ? degree() : 2;
}

int SbpOperator1D::exact_degree_interior() const {
  return kind == OperatorKind::LGL ? degree() : 4;
}

int SbpOperator1D::closure_rows() const { return kind == OperatorKind::LGL ? 0 : 4; }

void refresh_derived_matrices(SbpOperator1D& op) { fill_derived(op); }

SbpOperator1D build_lgl_operator(int poly_degree) {
  if (poly_degree < 1)
    throw std::invalid_argument("LGL operator needs polynomial degree >= 1");

  const int N = poly_degree;
  const std::size_t n = static_cast<std::size_t>(N) + 1;
  SbpOperator1D op;
  op.kind = OperatorKind::LGL;
  op.nodes.assign(n, 0.0);
  op.weights.assign(n, 0.0);
  op.nodes.front() = -1.0;
  op.nodes.back() = 1.0;

  // Interior nodes are the roots of P_N'. Newton from Chebyshev-Lobatto points,
  // with P_N'' taken from the Legendre ODE.
  for (int k = 1; k < N; ++k) {
    double x = -std::cos(std::numbers::pi * k / N);
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(N, x);
      const double ddp = (2.0 * x * dp - N * (N + 1.0) * p) / (1.0 - x * x);
      const double dx = dp / ddp;
      x -= dx;
      if (std::fabs(dx) <= 1e-15) break;
    }
    op.nodes[k] = x;
  }
  // Symmetrize against round-off so that nodes are exactly mirror images.
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double s = 0.5 * (op.nodes[n - 1 - k] - op.nodes[k]);
    op.nodes[k] = -s;
    op.nodes[n - 1 - k] = s;
  }
  if (n % 2 == 1) op.nodes[n / 2] = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double p = legendre(N, op.nodes[k]).p;
    op.weights[k] = 2.0 / (N * (N + 1.0) * p * p);
  }

  // Barycentric differentiation matrix; diagonal by the negative-sum trick.
  std::vector<double> bary(n, 1.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) bary[j] /= (op.nodes[j] - op.nodes[k]);

  op.D = DenseMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    double diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      op.D(i, j) = (bary[j] / bary[i]) / (op.nodes[i] - op.nodes[j]);
      diag -= op.D(i, j);
    }
    op.D(i, i) = diag;
  }
  fill_derived(op);
  return op;
}

SbpOperator1D build_fd_sbp_operator(int n_nodes) {
  if (n_nodes < 13)
    throw std::invalid_argument("FD-SBP 2-4 operator needs at least 13 nodes");

  const std::size_t n = static_cast<std::size_t>(n_nodes);
  const double h = 2.0 / (n_nodes - 1);
  SbpOperator1D op;
  op.kind = OperatorKind::FDSBP;
  op.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) op.nodes[i] = -1.0 + h * static_cast<double>(i);
  op.nodes.back() = 1.0;

  // Classical diagonal-norm 2-4 closure.
  constexpr double kNorm[4] = {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0};
  constexpr double kClosure[4][6] = {
      {-24.0 / 17.0, 59.0 / 34.0, -4.0 / 17.0, -3.0 / 34.0, 0.0, 0.0},
      {-1.0 / 2.0, 0.0, 1.0 / 2.0, 0.0, 0.0, 0.0},
      {4.0 / 43.0, -59.0 / 86.0, 0.0, 59.0 / 86.0, -4.0 / 43.0, 0.0},
      {3.0 / 98.0, 0.0, -59.0 / 98.0, 0.0, 32.0 / 49.0, -4.0 / 49.0},
  };
  constexpr double kInterior[5] = {1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0};

  op.weights.assign(n, h);
  for (int i = 0; i < 4; ++i) {
    op.weights[i] = h * kNorm[i];
    op.weights[n - 1 - i] = h * kNorm[i];
  }

  op.D = DenseMatrix(n);
  for (std::size_t i = 4; i + 4 < n; ++i)
    for (int k = 0; k < 5; ++k) op.D(i, i + k - 2) = kInterior[k] / h;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 6; ++k) {
      op.D(i, k) = kClosure[i][k] / h;
      op.D(n - 1 - i, n - 1 - k) = -kClosure[i][k] / h;
    }
  }
  fill_derived(op);
  return op;
}

bool ValidationReport::passes(double tol) const {
  return sbp_violation <= tol && skew_violation <= tol && weight_sum_violation <= tol &&
         min_weight > 0.0 && constant_violation <= tol && linear_violation <= tol &&
         endpoint_violation <= tol && polynomial_violation <= 10.0 * tol &&
         interior_polynomial_violation <= 10.0 * tol;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific;
  os << "sbp_violation           " << sbp_violation << "\n"
     << "skew_violation          " << skew_violation << "\n"
     << "weight_sum_violation    " << weight_sum_violation << "\n"
     << "min_weight              " << min_weight << "\n"
     << "constant_violation      " << constant_violation << "\n"
     << "linear_violation        " << linear_violation << "\n"
     << "endpoint_violation      " << endpoint_violation << "\n"
     << "polynomial_violation    " << polynomial_violation << "  (degree <= " << exact_degree
     << ", all rows)\n"
     << "interior_poly_violation " << interior_polynomial_violation << "  (degree <= "
     << interior_exact_degree << ", interior rows)\n"
     << "status                  " << (passes() ? "OK" : "FAIL") << "\n";
  return os.str();
}

ValidationReport verify_sbp(const SbpOperator1D& op) {
  ValidationReport r;
  const std::size_t n = op.nodes.size();
  if (n < 2 || op.weights.size() != n || op.D.size() != n) {
    r.sbp_violation = r.constant_violation = r.linear_violation = INFINITY;
    return r;
  }

  // Recompute Q from (M, D) rather than trusting the stored copy.
  DenseMatrix Q(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Q(i, j) = op.weights[i] * op.D(i, j);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double b = 0.0;
      if (i == j && i == 0) b = -1.0;
      if (i == j && i == n - 1) b = 1.0;
      r.sbp_violation = std::fmax(r.sbp_violation, std::fabs(Q(i, j) + Q(j, i) - b));
      if (op.S.size() == n)
        r.skew_violation = std::fmax(r.skew_violation, std::fabs(op.S(i, j) + op.S(j, i)));
    }
  }

  double wsum = 0.0;
  r.min_weight = INFINITY;
  for (double w : op.weights) {
    wsum += w;
    r.min_weight = std::fmin(r.min_weight, w);
  }
  r.weight_sum_violation = std::fabs(wsum - 2.0);
  r.endpoint_violation = std::fabs(op.nodes.front() + 1.0) + std::fabs(op.nodes.back() - 1.0);

  r.exact_degree = op.exact_degree_all_rows();
  r.interior_exact_degree = op.exact_degree_interior();
  const int closure = op.closure_rows();

  for (std::size_t i = 0; i < n; ++i) {
    double d1 = 0.0;
    double dx = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      d1 += op.D(i, j);
      dx += op.D(i, j) * op.nodes[j];
    }
    r.constant_violation = std::fmax(r.constant_violation, std::fabs(d1));
    r.linear_violation = std::fmax(r.linear_violation, std::fabs(dx - 1.0));

    const bool interior =
        static_cast<int>(i) >= closure && static_cast<int>(i) < static_cast<int>(n) - closure;
    const int max_deg = interior ? r.interior_exact_degree : r.exact_degree;
    for (int k = 2; k <= max_deg; ++k) {
      double dxk = 0.0;
      for (std::size_t j = 0; j < n; ++j) dxk += op.D(i, j) * std::pow(op.nodes[j], k);
      const double exact = k * std::pow(op.nodes[i], k - 1);
      const double err = std::fabs(dxk - exact) / k;
      if (k <= r.exact_degree) r.polynomial_violation = std::fmax(r.polynomial_violation, err);
      if (interior) r.interior_polynomial_violation = std::fmax(r.interior_polynomial_violation, err);
    }
  }
  return r;
}

}  // namespace sbpmhd
