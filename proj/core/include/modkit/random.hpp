#pragma once

// Seeded generators for verification campaigns. The same seed always yields
// the same sequence of instances on a given platform.

#include <cstdint>
#include <random>

#include "modkit/states.hpp"

namespace modkit {

inline constexpr double kFaithfulShift = 1e-3;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  /// Standard complex normal: (N(0,1) + i N(0,1)) / sqrt(2).
  Complex complex_normal();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

ComplexMatrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols);
ComplexVector random_unit_vector(Rng& rng, Eigen::Index d);
ComplexMatrix random_hermitian(Rng& rng, Eigen::Index d);
ComplexMatrix random_unitary(Rng& rng, Eigen::Index d);

/// G G* / ||G G*||_HS with G a d x rank standard complex normal matrix.
ComplexMatrix random_psd(Rng& rng, Eigen::Index d, Eigen::Index rank);
inline ComplexMatrix random_psd(Rng& rng, Eigen::Index d) { return random_psd(rng, d, d); }

/// G G* normalized to unit trace, plus shift * 1, renormalized. Faithful by construction.
DensityMatrix random_density(Rng& rng, Eigen::Index d, double shift = kFaithfulShift);

}  // namespace modkit
