// Simultaneous approximation of two scaled indicators l*X[0,L] and
// r*X[0,R] (with l*L = r*R) by one weighted family of translated
// indicators of shared lengths.  The decomposition runs a Euclidean-style
// operator: swap the roles when L < R, otherwise subtract and emit one
// signature.  Refinement enforces a length floor at the cost of doubling
// the weight budget, and sigfinal converts the result into trapezoid
// five-tuples.
//
// The core loop is a template so golden tests can run it in exact
// rational arithmetic; production uses double.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apw/circle_core.hpp"
#include "apw/skewed.hpp"

namespace apw {

template <typename T>
struct BasicQuadruple {
    T l{}, r{}, L{}, R{};
};

template <typename T>
struct BasicSignature {
    T len{}, w{}, ls{}, rs{};
};

using Quadruple = BasicQuadruple<double>;
using Signature = BasicSignature<double>;

struct FiveTuple {
    double alpha = 0.0;               // w / len
    double ac = 0.0, bc = 0.0;        // left-ramp start/end offsets
    double cc = 0.0, dc = 0.0;        // right-ramp start/end offsets
};

struct DecomposeStats {
    std::size_t iterations = 0;
    std::size_t subtract_steps = 0;
    bool capped = false;  // iteration cap hit; result is partial
};

inline constexpr std::size_t kDecomposeIterationCap = 1'000'000;
inline constexpr double kDefaultSignatureEps = 1e-4;

// One operator step.  Preserves l*L == r*R.
template <typename T>
BasicQuadruple<T> h_step(const BasicQuadruple<T>& t) {
    if (t.l < T(0) || t.r < T(0) || t.L < T(0) || t.R < T(0)) {
        throw std::invalid_argument("h_step: negative component");
    }
    if (t.L < t.R) return {t.r, t.l, t.R, t.L};
    if (t.r < t.l) {
        // cannot occur when l*L == r*R and L >= R
        throw std::logic_error("h_step: r < l in subtract branch");
    }
    return {t.l, t.r - t.l, t.L - t.R, t.R};
}

// Iterates h_step until both weights drop to eps (or one vanishes),
// emitting a signature per subtract step.  Swap steps flip which side
// subsequent signatures address, tracked by parity.
template <typename T>
std::vector<BasicSignature<T>> decompose(BasicQuadruple<T> t, const T& eps,
                                         DecomposeStats* stats = nullptr,
                                         std::size_t iteration_cap = kDecomposeIterationCap) {
    if (!(eps > T(0))) throw std::invalid_argument("decompose: eps > 0 required");
    std::vector<BasicSignature<T>> sigs;
    DecomposeStats local;
    bool swapped = false;
    while (true) {
        if (t.l == T(0) || t.r == T(0)) break;
        if (t.l <= eps && t.r <= eps) break;
        if (t.L == T(0) && t.R == T(0)) break;
        if (local.iterations >= iteration_cap) {
            local.capped = true;
            break;
        }
        ++local.iterations;
        if (t.L < t.R) {
            t = BasicQuadruple<T>{t.r, t.l, t.R, t.L};
            swapped = !swapped;
            continue;
        }
        // subtract step: peel r*X[0,R] worth of l off the left target
        BasicSignature<T> s{t.R, t.l, t.L - t.R, T(0)};
        if (swapped) std::swap(s.ls, s.rs);
        sigs.push_back(s);
        ++local.subtract_steps;
        t = BasicQuadruple<T>{t.l, t.r - t.l, t.L - t.R, t.R};
        if (t.r < T(0)) t.r = T(0);  // exact-zero in exact arithmetic
    }
    if (stats) *stats = local;
    return sigs;
}

// Relative slack allowed on the l*L == r*R invariant for double inputs.
bool quadruple_valid(const Quadruple& q, double rel_tol = 1e-12);

// sum_i w_i X[ls_i, ls_i+len_i)(x) -- the left-side reconstruction; the
// right side uses the rs_i starts.
double signature_sum(const std::vector<Signature>& sigs, double x, bool left_side);

struct ResidualReport {
    double left = 0.0;   // max |l X[0,L) - sum| over the probe grid
    double right = 0.0;  // same for r X[0,R)
};

// Pointwise residuals sampled on `probes` points spanning [0, max(L,R)].
ResidualReport reconstruction_residual(const Quadruple& q, const std::vector<Signature>& sigs,
                                       std::size_t probes = 1000);

// Enforces len_i >= min(L,R)/3 by splitting short signatures in two with
// opposite-sign weights; residuals unchanged, weight budget at most
// doubled.
std::vector<Signature> refine_signatures(const std::vector<Signature>& sigs, double L, double R);

struct SigfinalResult {
    std::vector<FiveTuple> tuples;
    std::vector<Signature> refined;
    DecomposeStats stats;
};

// Five-tuples for the ratio beta = (b-a)/(d-c), from the quadruple
// (1, beta, 1, 1/beta).  beta must lie within [2^-cap_exp, 2^cap_exp].
SigfinalResult sigfinal(double beta, double eps, int cap_exp = 100);

// Weighted trapezoid sum at point x: component ramps are placed at
// a + (b-a)*ac_i .. a + (b-a)*bc_i and c + (b-a)*cc_i .. c + (b-a)*dc_i,
// each weighted by alpha_i * len_i^2.
double sigfinal_reconstruct(const SkewedSegment& eta, const std::vector<FiveTuple>& tuples,
                            double x);

// CSV rows "len,w,ls,rs" with a header, 12 significant digits.
std::string signatures_to_csv(const std::vector<Signature>& sigs);
std::vector<Signature> signatures_from_csv(const std::string& text);

}  // namespace apw
