#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mpve {

/// splitmix64 mixing step; used to derive independent seeds from a master seed.
std::uint64_t splitmix64(std::uint64_t& state);

/// Folds an ordered list of parts (master seed, indices, ...) into one seed.
/// Deterministic and order-sensitive, so (seed, snr_index, trial_index)
/// streams never collide across the sweep grid.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// Deterministic random source. Gaussian draws use an explicit polar
/// Box-Muller on top of mt19937_64 so sequences do not depend on the
/// standard library's unspecified std::normal_distribution algorithm.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();

    /// Standard normal N(0, 1).
    double normal();

    /// Complex normal CN(0, 1): unit-mean power, independent re/im.
    std::complex<double> complex_normal();

    /// Uniform phase in [0, 2*pi).
    double phase();

  private:
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace mpve
