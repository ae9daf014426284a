#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sbpmhd {

/// Small dense row-major square matrix. Operator sizes stay around 4..13.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

enum class OperatorKind { LGL, FDSBP };

/// One-dimensional diagonal-norm SBP operator on the reference line [-1, 1].
///
/// Q = M D satisfies Q + Q^T = B with B = diag(-1, 0, ..., 0, 1). The volume
/// terms use the skew-symmetric S = Q - Q^T = 2Q - B.
struct SbpOperator1D {
  OperatorKind kind = OperatorKind::LGL;
  std::vector<double> nodes;
  std::vector<double> weights;
  DenseMatrix D;
  DenseMatrix Q;
  DenseMatrix S;
  DenseMatrix B;

  int n_nodes() const { return static_cast<int>(nodes.size()); }
  /// Polynomial degree N (n_nodes - 1).
  int degree() const { return n_nodes() - 1; }
  /// Polynomial degree differentiated exactly on every row.
  int exact_degree_all_rows() const;
  /// Degree differentiated exactly on interior (non-closure) rows.
  int exact_degree_interior() const;
  /// Number of closure rows at each end (0 for collocation operators).
  int closure_rows() const;
};

/// Legendre-Gauss-Lobatto collocation operator (DGSEM) of degree poly_degree.
/// Throws std::invalid_argument for poly_degree < 1.
SbpOperator1D build_lgl_operator(int poly_degree);

/// Diagonal-norm 2-4 finite-difference SBP operator on n_nodes equispaced
/// nodes. Throws std::invalid_argument for n_nodes < 13.
SbpOperator1D build_fd_sbp_operator(int n_nodes);

/// Rebuilds Q, S and B from nodes, weights and D. Used after hand edits.
void refresh_derived_matrices(SbpOperator1D& op);

struct ValidationReport {
  double sbp_violation = 0.0;           ///< max |Q + Q^T - B|
  double skew_violation = 0.0;          ///< max |S + S^T|
  double weight_sum_violation = 0.0;    ///< |sum(w) - 2|
  double min_weight = 0.0;
  double constant_violation = 0.0;      ///< max |D 1|
  double linear_violation = 0.0;        ///< max |D x - 1|
  double endpoint_violation = 0.0;      ///< |x_0 + 1| + |x_N - 1|
  double polynomial_violation = 0.0;    ///< scaled exactness error up to the operator's degree
  double interior_polynomial_violation = 0.0;
  int exact_degree = 0;
  int interior_exact_degree = 0;

  bool passes(double tol = 1e-12) const;
  std::string to_string() const;
};

/// Measures every structural invariant; never throws.
ValidationReport verify_sbp(const SbpOperator1D& op);

}  // namespace sbpmhd
