#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace ngauss {

/**
 * Seedable generator built on std::mt19937_64, whose output sequence is fixed
 * by the C++ standard. Uniform and Gaussian variates are derived here rather
 * than through <random> distributions, whose algorithms are unspecified.
 *
 * Each (seed, stream) pair selects an independent substream, so replications
 * indexed by stream give the same values whether run serially or in parallel.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    [[nodiscard]] std::uint64_t next_u64() { return engine_(); }
    /// Uniform on the open interval (0, 1), 53 bits of resolution.
    [[nodiscard]] double uniform();
    /// Standard normal by the Marsaglia polar method.
    [[nodiscard]] double normal();
    /// Laplace(mu, b) by inversion.
    [[nodiscard]] double laplace(double mu, double b);

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Mixes a seed and a stream id into a single 64-bit engine seed (splitmix64).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace ngauss
