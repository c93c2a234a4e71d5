// Trapezoid bump functions ("skewed segments") eta(a,b,c,d): zero outside
// [a,d], one on [b,c], linear ramps between.  This module provides their
// pointwise and spectral calculus (averages, the SK convolution operator,
// coefficient variation, partial-sum expansions) and the FB / SSI / SAI /
// FI quadrature functionals over families of such trapezoids.
//
// The huge symbolic scale separations in the definitions of OU / SSI /
// SAI are exposed as a configurable ladder of relative scales; only the
// orderings between rungs matter to the inequalities tested downstream.

#pragma once

#include <cstddef>
#include <vector>

#include "apw/circle_core.hpp"
#include "apw/measures.hpp"

namespace apw {

class SkewedSegment {
public:
    SkewedSegment(double a, double b, double c, double d);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }

    double support_length() const { return d_ - a_; }
    // integral of eta over the circle: (d + c - b - a)/2
    double area() const { return 0.5 * (d_ + c_ - b_ - a_); }

    bool symmetric(double rel_tol = 1e-9) const;
    // both ramps longer than support/1000
    bool proportional() const;
    double center() const;  // (b+c)/2; symmetric segments only

    // circle-wrapped piecewise-linear evaluation
    double eval(double x) const;

    // analytic Fourier coefficient (1/2pi normalization)
    Complex coefficient(long k) const;

private:
    double a_, b_, c_, d_;
};

GridFunction sample_skewed(const SkewedSegment& eta, CircleGrid grid);

// quadrature of f * eta over the circle (plain measure, not normalized)
Complex integrate_against(const SkewedSegment& eta, const GridFunction& f);

// integrate_against / area -- the average of f over the skewed segment
Complex skew_average(const SkewedSegment& eta, const GridFunction& f);

// SK_{a,b}(f)(x) = average of f over the symmetric trapezoid
// (x-a, x-b, x+b, x+a); realized as a normalized convolution.
// Requires 0 < b < a <= pi.
GridFunction sk_operator(const GridFunction& f, double a, double b);

struct FourierVariationResult {
    double partial = 0.0;     // sum over |k| <= k_cut of |coeff(k+1)-coeff(k)|
    double tail_bound = 0.0;  // certified bound on the rest from 1/k^2 decay
    double total() const { return partial + tail_bound; }
};

// Total variation of the coefficient sequence; eta must be symmetric
// about 0 (a = -d, b = -c) so the coefficients are real.
FourierVariationResult fourier_variation(const SkewedSegment& eta, long k_cut = 10'000);

struct ExpansionResult {
    std::vector<double> alphas;  // alpha_i = coeff(i) - coeff(i+1), i = 0..n
    Spectrum reconstruction;     // sum_i alpha_i S_i(F) + coeff(n+1) F
};

// Expansion of the normalized convolution F * eta into partial sums of F.
// eta symmetric about 0; F of degree <= n.
ExpansionResult partial_sum_expansion(const SkewedSegment& eta, const Spectrum& f, int n);

// Desk-scale instantiation of the trapezoid-family scale ladder.  All
// entries except dprime_cap are relative to the interval length.
struct SkewedScales {
    double ou_ramp_lo = 1.0 / 16.0;
    double ou_ramp_hi = 1.0 / 8.0;
    double ssi_gap_lo = 1.0 / 32.0;   // FB parameter a for SSI
    double ssi_limit = 8.0;           // FB parameters b = c for SSI
    double sai_gap_lo = 1.0 / 128.0;  // finer/wider ladder rung for SAI
    double sai_limit = 32.0;
    double dprime_cap = std::numbers::pi / 2;  // absolute cap on outer half-widths
    int fb_mesh = 64;                 // FB quadrature nodes per axis
    int fi_mesh = 6;                  // FI quadrature nodes per axis
    double q = 3.0;                   // dual exponent for all |.|^q integrands

    void validate() const;  // enforces the orderings the estimates rely on
};

// FB_{gap_lo, limit, gap_hi}(z): (1/gap_lo^2) times the integral over
// symmetric trapezoids centered z with ramp gap d'-c' in (gap_lo, gap_hi),
// 0 < 2d' < limit and c' > 0, of |average of B|^q.  Midpoint rule on a
// mesh x mesh grid of the (gap, d') region, d' capped at dprime_cap.
double fb_functional(double gap_lo, double limit, double gap_hi, double z,
                     const GridFunction& b_fn, double q, int mesh, double dprime_cap);

// FB at every grid point at once (one convolution per quadrature node).
std::vector<double> fb_profile(double gap_lo, double limit, double gap_hi,
                               const GridFunction& b_fn, double q, int mesh,
                               double dprime_cap);

// SSI(I) = int_I FB_ssi(z) dz
double ssi(Interval iv, const GridFunction& b_fn, const SkewedScales& sc);

// SAI(I) = int_I FB_sai(z) |1 - A(z)|^q dz
double sai(Interval iv, const GridFunction& a_fn, const GridFunction& b_fn,
           const SkewedScales& sc);

// Membership in the external skewed set of I: ramps within the OU window,
// total support within the slack budget, I inside the flat middle [b,c].
bool in_ou(const SkewedSegment& eta, Interval iv, CircleGrid grid, const SkewedScales& sc);

// FI(I) = |I|^-4 int over OU(I) of |average of B|^q, via a product
// midpoint rule over (left ramp, right ramp, middle width, position).
double fi(Interval iv, const GridFunction& b_fn, const SkewedScales& sc);

}  // namespace apw
