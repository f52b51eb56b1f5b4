#include "detline/random.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

namespace detline::rng {

Engine stream(std::uint64_t seed, std::string_view name) {
  // FNV-1a of the stream name, mixed with the seed through seed_seq
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Engine(seq);
}

double uniform(Engine& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

std::complex<double> uniform_disk_point(Engine& g, double radius) {
  const double r = radius * std::sqrt(uniform(g, 0.0, 1.0));
  const double phi = uniform(g, 0.0, 2.0 * std::numbers::pi);
  return std::polar(r, phi);
}

grassmannian::Matrix gaussian_matrix(Engine& g, int rows, int cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  grassmannian::Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = n(g);
      const double im = n(g);
      m(i, j) = {re, im};
    }
  return m;
}

grassmannian::ModeOperator random_unitary(Engine& g, grassmannian::ModeWindow w) {
  const grassmannian::Matrix a = gaussian_matrix(g, w.dim(), w.dim());
  Eigen::HouseholderQR<grassmannian::Matrix> qr(a);
  grassmannian::Matrix q = qr.householderQ();
  return {w, std::move(q), grassmannian::Tail::Identity, grassmannian::Tail::Identity};
}

grassmannian::ModeOperator random_perturbation(Engine& g, grassmannian::ModeWindow w,
                                               double scale) {
  return grassmannian::identity_plus(w, scale * gaussian_matrix(g, w.dim(), w.dim()));
}

grassmannian::ModeOperator random_smoothing(Engine& g, grassmannian::ModeWindow w, double scale) {
  const double norm = std::sqrt(2.0) * w.dim();
  return {w, scale / norm * gaussian_matrix(g, w.dim(), w.dim()), grassmannian::Tail::Zero,
          grassmannian::Tail::Zero};
}

}  // namespace detline::rng
