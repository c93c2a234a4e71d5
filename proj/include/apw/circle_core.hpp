// Discretized circle, Fourier analysis primitives, norms, kernels,
// band projections and convolution.  Everything downstream consumes the
// two twin representations defined here: sampled functions on a uniform
// grid and two-sided Fourier coefficient arrays.
//
// Conventions (fixed once, here):
//   * coefficient:  f_hat(k) = mean over samples of f(x_j) exp(-i k x_j),
//     the discrete form of (1/2pi) int f exp(-ikt) dt;
//   * L^q norms use the normalized measure (mean-quadrature).
// With these normalizations Hausdorff-Young holds with constant 1 and
// Parseval is an equality, so both become clean testable statements.

#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace apw {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Complex = std::complex<double>;

// Raised when a request cannot be represented on the grid (frequency past
// Nyquist, interval below one cell, ...).
class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Uniform grid x_j = 2*pi*j/n on the circle.  n is a power of two, >= 8.
class CircleGrid {
public:
    explicit CircleGrid(std::size_t n_samples);

    std::size_t size() const { return n_; }
    double step() const { return kTwoPi / static_cast<double>(n_); }
    double point(std::size_t j) const { return step() * static_cast<double>(j); }

    friend bool operator==(const CircleGrid&, const CircleGrid&) = default;

private:
    std::size_t n_;
};

// Complex samples over a CircleGrid.  Immutable by convention after
// construction; operations below return new values.
class GridFunction {
public:
    GridFunction(CircleGrid grid, std::vector<Complex> values);

    static GridFunction constant(CircleGrid grid, Complex value);

    const CircleGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    Complex operator[](std::size_t j) const { return values_[j]; }
    Complex& operator[](std::size_t j) { return values_[j]; }
    std::span<const Complex> values() const { return values_; }

private:
    CircleGrid grid_;
    std::vector<Complex> values_;
};

// Two-sided coefficient array indexed k = -M..M.
class Spectrum {
public:
    explicit Spectrum(int max_freq);
    Spectrum(int max_freq, std::vector<Complex> coeffs);

    int max_freq() const { return max_freq_; }
    std::size_t size() const { return coeffs_.size(); }

    // coeff(k) is 0 outside [-M, M]; set_coeff requires |k| <= M.
    Complex coeff(int k) const;
    void set_coeff(int k, Complex value);

    std::span<const Complex> raw() const { return coeffs_; }

private:
    int max_freq_;
    std::vector<Complex> coeffs_;  // index k + max_freq_
};

// --- analysis / synthesis ---------------------------------------------

// Coefficients k = -M..M of the sampled function; exact (no aliasing)
// whenever f is a trigonometric polynomial of degree <= n/2 - M - 1.
Spectrum fourier_coefficients(const GridFunction& f, int max_freq);

// values[j] = sum_k coeff(k) exp(i k x_j).  Requires M < n/2.
GridFunction synthesize(const Spectrum& s, CircleGrid grid);

// --- norms --------------------------------------------------------------

// (sum_k |coeff(k)|^p)^(1/p), p >= 1.
double ap_norm(const Spectrum& s, double p);

// ((1/n) sum_j |f(x_j)|^q)^(1/q), q >= 1.
double lq_norm(const GridFunction& f, double q);

// --- projections and kernels --------------------------------------------

// Zeroes all coefficients with |k| > cutoff.
Spectrum partial_sum(const Spectrum& s, int cutoff);

// coeff(k) = 1 for |k| <= m.
Spectrum dirichlet_kernel(int m);

// coeff(k) = 1 - |k|/(m+1) for |k| <= m; nonnegative on the circle.
Spectrum fejer_kernel(int m);

// Keeps exactly the dyadic band 2^band <= |k| < 2^(band+1); zeroes the
// rest including k = 0.  Bands are half-open so they tile |k| >= 1.
Spectrum band_projection(const Spectrum& s, int band);

// Largest band index fully representable below Nyquist for this grid.
int max_band_index(CircleGrid grid);

// --- products and pairings ------------------------------------------------

// Normalized circular convolution; coefficients multiply.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

// Pointwise product of samples.
GridFunction multiply_pointwise(const GridFunction& f, const GridFunction& g);

// Quadrature mean (1/n) sum f(x_j).
Complex mean(const GridFunction& f);

// (1/n) sum_j f(x_j) g(x_j) -- no conjugation.
Complex inner_mean(const GridFunction& f, const GridFunction& g);

// Same pairing evaluated in frequency space over the full DFT ring
// (including the Nyquist bin); agrees with inner_mean to rounding.
Complex spectral_inner_mean(const GridFunction& f, const GridFunction& g);

// DFT bin at n/2 under the coefficient normalization above; the one ring
// frequency a Spectrum paired with this grid cannot carry.
Complex nyquist_coefficient(const GridFunction& f);

// --- coefficient-space arithmetic (degree grows as needed) ---------------

Spectrum spectrum_add(const Spectrum& a, const Spectrum& b);
Spectrum spectrum_sub(const Spectrum& a, const Spectrum& b);
Spectrum spectrum_scale(const Spectrum& a, Complex factor);
// Coefficient convolution: the spectrum of the pointwise product.
Spectrum spectrum_multiply(const Spectrum& a, const Spectrum& b);
// Constant polynomial c (degree 0).
Spectrum spectrum_constant(Complex c);

namespace detail {
// In-place radix-2 transform; forward uses exp(-2*pi*i*jk/n).
void fft(std::vector<Complex>& data, bool inverse);
}  // namespace detail

}  // namespace apw
