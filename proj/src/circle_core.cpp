#include "apw/circle_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

namespace apw {

CircleGrid::CircleGrid(std::size_t n_samples) : n_(n_samples) {
    if (n_samples < 8 || !std::has_single_bit(n_samples)) {
        throw std::invalid_argument("CircleGrid: n_samples must be a power of two >= 8");
    }
}

GridFunction::GridFunction(CircleGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("GridFunction: value count does not match grid");
    }
    for (const Complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("GridFunction: non-finite sample");
        }
    }
}

GridFunction GridFunction::constant(CircleGrid grid, Complex value) {
    return GridFunction(grid, std::vector<Complex>(grid.size(), value));
}

Spectrum::Spectrum(int max_freq) : max_freq_(max_freq) {
    if (max_freq < 0) throw std::invalid_argument("Spectrum: max_freq must be >= 0");
    coeffs_.assign(2 * static_cast<std::size_t>(max_freq) + 1, Complex{});
}

Spectrum::Spectrum(int max_freq, std::vector<Complex> coeffs)
    : max_freq_(max_freq), coeffs_(std::move(coeffs)) {
    if (max_freq < 0) throw std::invalid_argument("Spectrum: max_freq must be >= 0");
    if (coeffs_.size() != 2 * static_cast<std::size_t>(max_freq) + 1) {
        throw std::invalid_argument("Spectrum: expected 2M+1 coefficients");
    }
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("Spectrum: non-finite coefficient");
        }
    }
}

Complex Spectrum::coeff(int k) const {
    if (k < -max_freq_ || k > max_freq_) return Complex{};
    return coeffs_[static_cast<std::size_t>(k + max_freq_)];
}

void Spectrum::set_coeff(int k, Complex value) {
    if (k < -max_freq_ || k > max_freq_) {
        throw std::invalid_argument("Spectrum::set_coeff: frequency out of range");
    }
    coeffs_[static_cast<std::size_t>(k + max_freq_)] = value;
}

namespace detail {

void fft(std::vector<Complex>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("fft: length must be a power of two");
    }
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 1.0 : -1.0) * kTwoPi / static_cast<double>(len);
        const Complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                Complex u = data[i + j];
                Complex v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(n);
        for (Complex& x : data) x *= inv;
    }
}

}  // namespace detail

Spectrum fourier_coefficients(const GridFunction& f, int max_freq) {
    const std::size_t n = f.grid().size();
    if (max_freq < 0) throw std::invalid_argument("fourier_coefficients: max_freq >= 0 required");
    if (static_cast<std::size_t>(max_freq) >= n / 2) {
        throw ResolutionError("fourier_coefficients: max_freq must be below n/2");
    }
    std::vector<Complex> ring(f.values().begin(), f.values().end());
    detail::fft(ring, /*inverse=*/false);
    Spectrum s(max_freq);
    const double inv = 1.0 / static_cast<double>(n);
    for (int k = -max_freq; k <= max_freq; ++k) {
        const std::size_t bin = static_cast<std::size_t>((k + static_cast<int>(n)) % static_cast<int>(n));
        s.set_coeff(k, ring[bin] * inv);
    }
    return s;
}

GridFunction synthesize(const Spectrum& s, CircleGrid grid) {
    const std::size_t n = grid.size();
    if (static_cast<std::size_t>(s.max_freq()) >= n / 2) {
        throw ResolutionError("synthesize: spectrum does not fit below Nyquist");
    }
    std::vector<Complex> ring(n, Complex{});
    for (int k = -s.max_freq(); k <= s.max_freq(); ++k) {
        const std::size_t bin = static_cast<std::size_t>((k + static_cast<int>(n)) % static_cast<int>(n));
        ring[bin] = s.coeff(k);
    }
    detail::fft(ring, /*inverse=*/true);
    // inverse fft divides by n; values[j] = sum_k c_k exp(ik x_j) needs no 1/n
    for (Complex& v : ring) v *= static_cast<double>(n);
    return GridFunction(grid, std::move(ring));
}

namespace {

// (sum w_i |z_i|^p)^(1/p), scaled by the max entry so large p cannot
// overflow before the final root.
double scaled_power_sum(std::span<const Complex> values, double p, double weight) {
    double top = 0.0;
    for (const Complex& v : values) top = std::max(top, std::abs(v));
    if (top == 0.0) return 0.0;
    double acc = 0.0;
    for (const Complex& v : values) acc += std::pow(std::abs(v) / top, p);
    return top * std::pow(weight * acc, 1.0 / p);
}

}  // namespace

double ap_norm(const Spectrum& s, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("ap_norm: p >= 1 required");
    return scaled_power_sum(s.raw(), p, 1.0);
}

double lq_norm(const GridFunction& f, double q) {
    if (!(q >= 1.0)) throw std::invalid_argument("lq_norm: q >= 1 required");
    return scaled_power_sum(f.values(), q, 1.0 / static_cast<double>(f.size()));
}

Spectrum partial_sum(const Spectrum& s, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("partial_sum: cutoff >= 0 required");
    Spectrum out(s.max_freq());
    const int keep = std::min(cutoff, s.max_freq());
    for (int k = -keep; k <= keep; ++k) out.set_coeff(k, s.coeff(k));
    return out;
}

Spectrum dirichlet_kernel(int m) {
    if (m < 0) throw std::invalid_argument("dirichlet_kernel: m >= 0 required");
    Spectrum s(m);
    for (int k = -m; k <= m; ++k) s.set_coeff(k, Complex{1.0, 0.0});
    return s;
}

Spectrum fejer_kernel(int m) {
    if (m < 0) throw std::invalid_argument("fejer_kernel: m >= 0 required");
    Spectrum s(m);
    for (int k = -m; k <= m; ++k) {
        s.set_coeff(k, Complex{1.0 - std::abs(k) / static_cast<double>(m + 1), 0.0});
    }
    return s;
}

Spectrum band_projection(const Spectrum& s, int band) {
    if (band < 0) throw std::invalid_argument("band_projection: band >= 0 required");
    Spectrum out(s.max_freq());
    if (band > 30) return out;  // 2^31 overflows int and exceeds any grid here
    const int lo = 1 << band;
    const long hi = 2L << band;
    for (int k = -s.max_freq(); k <= s.max_freq(); ++k) {
        const int a = std::abs(k);
        if (a >= lo && a < hi) out.set_coeff(k, s.coeff(k));
    }
    return out;
}

int max_band_index(CircleGrid grid) {
    // band j needs 2^(j+1) - 1 <= n/2 - 1
    int j = 0;
    while ((2L << (j + 1)) - 1 <= static_cast<long>(grid.size()) / 2 - 1) ++j;
    return j;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("convolve: grid mismatch");
    const std::size_t n = f.size();
    std::vector<Complex> a(f.values().begin(), f.values().end());
    std::vector<Complex> b(g.values().begin(), g.values().end());
    detail::fft(a, false);
    detail::fft(b, false);
    for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
    detail::fft(a, true);
    const double inv = 1.0 / static_cast<double>(n);
    for (Complex& v : a) v *= inv;
    return GridFunction(f.grid(), std::move(a));
}

GridFunction multiply_pointwise(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("multiply_pointwise: grid mismatch");
    std::vector<Complex> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[j] * g[j];
    return GridFunction(f.grid(), std::move(out));
}

Complex mean(const GridFunction& f) {
    Complex acc{};
    for (const Complex& v : f.values()) acc += v;
    return acc / static_cast<double>(f.size());
}

Complex inner_mean(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("inner_mean: grid mismatch");
    Complex acc{};
    for (std::size_t j = 0; j < f.size(); ++j) acc += f[j] * g[j];
    return acc / static_cast<double>(f.size());
}

Complex spectral_inner_mean(const GridFunction& f, const GridFunction& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("spectral_inner_mean: grid mismatch");
    const std::size_t n = f.size();
    std::vector<Complex> a(f.values().begin(), f.values().end());
    std::vector<Complex> b(g.values().begin(), g.values().end());
    detail::fft(a, false);
    detail::fft(b, false);
    // sum over the ring of f_hat(k) g_hat(-k)
    Complex acc{};
    for (std::size_t k = 0; k < n; ++k) acc += a[k] * b[(n - k) % n];
    return acc / static_cast<double>(n * n);
}

Complex nyquist_coefficient(const GridFunction& f) {
    const std::size_t n = f.size();
    Complex acc{};
    double sign = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += f[j] * sign;
        sign = -sign;
    }
    return acc / static_cast<double>(n);
}

Spectrum spectrum_add(const Spectrum& a, const Spectrum& b) {
    const int m = std::max(a.max_freq(), b.max_freq());
    Spectrum out(m);
    for (int k = -m; k <= m; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
    return out;
}

Spectrum spectrum_sub(const Spectrum& a, const Spectrum& b) {
    const int m = std::max(a.max_freq(), b.max_freq());
    Spectrum out(m);
    for (int k = -m; k <= m; ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
    return out;
}

Spectrum spectrum_scale(const Spectrum& a, Complex factor) {
    Spectrum out(a.max_freq());
    for (int k = -a.max_freq(); k <= a.max_freq(); ++k) out.set_coeff(k, a.coeff(k) * factor);
    return out;
}

Spectrum spectrum_multiply(const Spectrum& a, const Spectrum& b) {
    const int m = a.max_freq() + b.max_freq();
    Spectrum out(m);
    for (int i = -a.max_freq(); i <= a.max_freq(); ++i) {
        const Complex ai = a.coeff(i);
        if (ai == Complex{}) continue;
        for (int j = -b.max_freq(); j <= b.max_freq(); ++j) {
            out.set_coeff(i + j, out.coeff(i + j) + ai * b.coeff(j));
        }
    }
    return out;
}

Spectrum spectrum_constant(Complex c) {
    Spectrum s(0);
    s.set_coeff(0, c);
    return s;
}

}  // namespace apw
