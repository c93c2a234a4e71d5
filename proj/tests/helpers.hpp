// Shared test utilities: deterministic generators and slow reference
// implementations that the fast paths are checked against.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "apw/circle_core.hpp"

namespace apw::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

// Random trigonometric polynomial of exact degree <= deg with coefficients
// in the unit disc.
inline Spectrum random_polynomial(std::mt19937_64& g, int deg) {
    Spectrum s(deg);
    for (int k = -deg; k <= deg; ++k) {
        s.set_coeff(k, Complex{uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0)});
    }
    return s;
}

// O(n*M) direct-sum transform; the reference semantics for
// fourier_coefficients.
inline Spectrum dft_direct(const GridFunction& f, int max_freq) {
    Spectrum s(max_freq);
    const std::size_t n = f.size();
    for (int k = -max_freq; k <= max_freq; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j) {
            acc += f[j] * std::polar(1.0, -static_cast<double>(k) * f.grid().point(j));
        }
        s.set_coeff(k, acc / static_cast<double>(n));
    }
    return s;
}

// Direct synthesis sum, same role.
inline GridFunction synthesize_direct(const Spectrum& s, CircleGrid grid) {
    std::vector<Complex> vals(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        Complex acc{};
        for (int k = -s.max_freq(); k <= s.max_freq(); ++k) {
            acc += s.coeff(k) * std::polar(1.0, static_cast<double>(k) * grid.point(j));
        }
        vals[j] = acc;
    }
    return GridFunction(grid, std::move(vals));
}

inline double max_coeff_diff(const Spectrum& a, const Spectrum& b) {
    double worst = 0.0;
    const int m = std::max(a.max_freq(), b.max_freq());
    for (int k = -m; k <= m; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return worst;
}

inline double max_value_diff(const GridFunction& a, const GridFunction& b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    return worst;
}

}  // namespace apw::testing
