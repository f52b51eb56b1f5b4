#pragma once

// Operators on boundary sections of the circle truncated to the Fourier
// modes {-n_max, ..., n_max}. Outside the window each side (modes above
// n_max, modes below -n_max) acts as a declared multiple of the identity,
// so traces and Fredholm determinants of window-supported perturbations
// are exact.

#include <Eigen/Core>
#include <complex>

#include "detline/errors.hpp"

namespace detline::grassmannian {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kRankThreshold = 1e-8;

class ModeWindow {
 public:
  explicit ModeWindow(int n_max);

  int n_max() const noexcept { return n_max_; }
  int dim() const noexcept { return 2 * n_max_ + 1; }
  bool contains(int mode) const noexcept { return mode >= -n_max_ && mode <= n_max_; }
  /// Row/column index of a Fourier mode; WindowOverflow outside the window.
  int index_of(int mode) const;
  int mode_at(int index) const noexcept { return index - n_max_; }

  friend bool operator==(ModeWindow a, ModeWindow b) noexcept { return a.n_max_ == b.n_max_; }

 private:
  int n_max_;
};

enum class Tail { Identity, Zero };

struct ModeOperator {
  ModeWindow window{1};
  Matrix entries;
  Tail lower = Tail::Zero;  // modes < -n_max
  Tail upper = Tail::Zero;  // modes > n_max

  ModeOperator() : entries(Matrix::Zero(3, 3)) {}
  ModeOperator(ModeWindow w, Matrix m, Tail lo, Tail up);

  static ModeOperator identity(ModeWindow w);
  static ModeOperator zero(ModeWindow w);

  /// Same operator written on a window at least as large, padded by the tails.
  ModeOperator embedded(ModeWindow larger) const;
  ModeOperator adjoint() const;

  bool is_det_class() const noexcept { return lower == Tail::Identity && upper == Tail::Identity; }
  bool same_tails(const ModeOperator& other) const noexcept {
    return lower == other.lower && upper == other.upper;
  }
  bool is_projection(double tol = 1e-10) const;
};

/// Composition; operands on different windows are embedded into the larger one.
ModeOperator operator*(const ModeOperator& a, const ModeOperator& b);
/// Sums and differences whose tails are not again 0 or 1 raise NotCommensurable.
ModeOperator operator+(const ModeOperator& a, const ModeOperator& b);
ModeOperator operator-(const ModeOperator& a, const ModeOperator& b);

/// I + (window-supported) as a ModeOperator with identity tails.
ModeOperator identity_plus(ModeWindow w, const Matrix& k);

/// Determinant of the window block; exact for I + K with K window-supported.
/// NotDetClass unless both tails are the identity.
cplx fredholm_det(const ModeOperator& t);

/// Number of singular values above `threshold`.
int numerical_rank(const Matrix& m, double threshold = kRankThreshold);

struct KernelCokernel {
  int kernel = 0;
  int cokernel = 0;
  int index() const noexcept { return kernel - cokernel; }
};

/// Kernel and cokernel dimensions of `map` : C^cols -> C^rows.
KernelCokernel kernel_cokernel(const Matrix& map, double threshold = kRankThreshold);

/// Orthonormal columns spanning ran(P) inside the window of a Hermitian projection.
Matrix range_basis(const ModeOperator& projection);

}  // namespace detline::grassmannian
