#pragma once

// Reproducible randomness: every consumer derives its own generator from
// one 64-bit seed and a stream name, so adding a case never perturbs the
// draws of another.

#include <cstdint>
#include <random>
#include <string_view>

#include "detline/mode_operator.hpp"

namespace detline::rng {

using Engine = std::mt19937_64;

Engine stream(std::uint64_t seed, std::string_view name);

double uniform(Engine& g, double lo, double hi);
std::complex<double> uniform_disk_point(Engine& g, double radius);

/// Complex matrix with i.i.d. standard normal real and imaginary parts.
grassmannian::Matrix gaussian_matrix(Engine& g, int rows, int cols);

/// Haar-like unitary on the window (QR of a Gaussian matrix), identity tails.
grassmannian::ModeOperator random_unitary(Engine& g, grassmannian::ModeWindow w);

/// I + scale * G with G Gaussian, identity tails.
grassmannian::ModeOperator random_perturbation(Engine& g, grassmannian::ModeWindow w, double scale);

/// Window-supported (zero tails) Gaussian perturbation of norm about `scale`.
grassmannian::ModeOperator random_smoothing(Engine& g, grassmannian::ModeWindow w, double scale);

}  // namespace detline::rng
