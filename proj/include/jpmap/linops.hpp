#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "jpmap/types.hpp"

namespace jpmap {

enum class LinOpKind { Identity, DiagonalMask, DenseMatrix, Convolution, Decimation };

// Linear degradation operator A : R^d -> R^m with explicit adjoint.
// Immutable after construction; apply/adjoint_apply are pure.
class LinOp {
 public:
  static LinOp identity(Index d);
  // keep[i] in {0,1}; kept entries pass through, dropped entries map to 0.
  static LinOp diagonal_mask(Vec keep);
  static LinOp dense(Mat a);
  // 2D convolution of a rows x cols image with kernel h, zero boundary,
  // output same size (m = d). Kernel center at (h.rows()/2, h.cols()/2).
  static LinOp convolution(Mat kernel, Index rows, Index cols);
  // Block average over s x s blocks; rows and cols must be divisible by s.
  static LinOp decimation(Index factor, Index rows, Index cols);

  LinOpKind kind() const { return kind_; }
  Index in_dim() const { return in_dim_; }
  Index out_dim() const { return out_dim_; }

  Vec apply(const Vec& u) const;
  Vec adjoint_apply(const Vec& v) const;

  // Columns are apply(e_i); small sizes only (test and setup use).
  Mat materialize() const;
  // Cheap upper bound on the operator norm, used to scale adjoint checks.
  double norm_bound() const;

  const Mat& dense_matrix() const { return matrix_; }
  const Vec& mask() const { return keep_; }

 private:
  LinOp() = default;
  LinOpKind kind_ = LinOpKind::Identity;
  Index in_dim_ = 0, out_dim_ = 0;
  Vec keep_;          // DiagonalMask
  Mat matrix_;        // DenseMatrix
  Mat kernel_;        // Convolution
  Index img_rows_ = 0, img_cols_ = 0, factor_ = 1;
};

inline Vec apply(const LinOp& op, const Vec& u) { return op.apply(u); }
inline Vec adjoint_apply(const LinOp& op, const Vec& v) { return op.adjoint_apply(v); }

struct CgFailure : std::runtime_error {
  CgFailure(const std::string& what, double residual_, int iters_)
      : std::runtime_error(what), residual(residual_), iters(iters_) {}
  double residual;
  int iters;
};

// Conjugate gradient for SPD systems: returns x with ||M x - b|| <= tol * ||b||.
// Throws CgFailure (carrying the final residual) if maxiter is exhausted.
Vec cg_solve(const std::function<Vec(const Vec&)>& mat_apply, const Vec& b,
             double tol, int maxiter);

}  // namespace jpmap
