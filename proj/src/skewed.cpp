#include "apw/skewed.hpp"

#include <algorithm>
#include <cmath>

namespace apw {

SkewedSegment::SkewedSegment(double a, double b, double c, double d)
    : a_(a), b_(b), c_(c), d_(d) {
    if (!(a < b && b < c && c < d)) {
        throw std::invalid_argument("SkewedSegment: need a < b < c < d");
    }
    if (d - a > kTwoPi + 1e-12) {
        throw std::invalid_argument("SkewedSegment: support longer than the circle");
    }
    if (b - a < 1e-14 || d - c < 1e-14) {
        throw ResolutionError("SkewedSegment: degenerate ramp");
    }
}

bool SkewedSegment::symmetric(double rel_tol) const {
    return std::abs((b_ - a_) - (d_ - c_)) <= rel_tol * (d_ - a_);
}

bool SkewedSegment::proportional() const {
    const double len = d_ - a_;
    return (b_ - a_) / len > 1e-3 && (d_ - c_) / len > 1e-3;
}

double SkewedSegment::center() const {
    if (!symmetric()) throw std::invalid_argument("SkewedSegment::center: not symmetric");
    return 0.5 * (b_ + c_);
}

double SkewedSegment::eval(double x) const {
    double u = std::fmod(x - a_, kTwoPi);
    if (u < 0) u += kTwoPi;
    u += a_;  // u in [a, a + 2pi)
    if (u <= b_) return u <= a_ ? 0.0 : (u - a_) / (b_ - a_);
    if (u <= c_) return 1.0;
    if (u < d_) return (d_ - u) / (d_ - c_);
    return 0.0;
}

Complex SkewedSegment::coefficient(long k) const {
    if (k == 0) return Complex{area() / kTwoPi, 0.0};
    const double kk = static_cast<double>(k);
    const auto e = [kk](double t) { return std::polar(1.0, -kk * t); };
    const Complex ramp_up = (e(a_) - e(b_)) / (b_ - a_);
    const Complex ramp_down = (e(c_) - e(d_)) / (d_ - c_);
    return -(ramp_up - ramp_down) / (kTwoPi * kk * kk);
}

GridFunction sample_skewed(const SkewedSegment& eta, CircleGrid grid) {
    std::vector<Complex> vals(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) vals[j] = {eta.eval(grid.point(j)), 0.0};
    return GridFunction(grid, std::move(vals));
}

Complex integrate_against(const SkewedSegment& eta, const GridFunction& f) {
    const double h = f.grid().step();
    Complex acc{};
    for (std::size_t j = 0; j < f.size(); ++j) acc += f[j] * eta.eval(f.grid().point(j));
    return acc * h;
}

Complex skew_average(const SkewedSegment& eta, const GridFunction& f) {
    return integrate_against(eta, f) / eta.area();
}

GridFunction sk_operator(const GridFunction& f, double a, double b) {
    if (!(0.0 < b && b < a)) throw std::invalid_argument("sk_operator: need 0 < b < a");
    if (a > std::numbers::pi) throw std::invalid_argument("sk_operator: support wraps, a > pi");
    const SkewedSegment eta(-a, -b, b, a);
    auto conv = convolve(f, sample_skewed(eta, f.grid()));
    const double scale = kTwoPi / eta.area();  // area = a + b
    std::vector<Complex> vals(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) vals[j] = conv[j] * scale;
    return GridFunction(f.grid(), std::move(vals));
}

namespace {

void require_symmetric_at_zero(const SkewedSegment& eta, const char* who) {
    if (std::abs(eta.a() + eta.d()) > 1e-12 || std::abs(eta.b() + eta.c()) > 1e-12) {
        throw std::invalid_argument(std::string(who) + ": eta must be symmetric about 0");
    }
}

}  // namespace

FourierVariationResult fourier_variation(const SkewedSegment& eta, long k_cut) {
    require_symmetric_at_zero(eta, "fourier_variation");
    if (k_cut < 4) throw std::invalid_argument("fourier_variation: k_cut too small");
    FourierVariationResult res;
    double prev = eta.coefficient(-k_cut).real();
    for (long k = -k_cut; k < k_cut; ++k) {
        const double next = eta.coefficient(k + 1).real();
        res.partial += std::abs(next - prev);
        prev = next;
    }
    // |coeff(k)| <= 2 / (pi k^2 (d-c)); both tails summed
    const double ramp = eta.d() - eta.c();
    res.tail_bound = 8.0 / (std::numbers::pi * ramp * static_cast<double>(k_cut - 2));
    return res;
}

ExpansionResult partial_sum_expansion(const SkewedSegment& eta, const Spectrum& f, int n) {
    require_symmetric_at_zero(eta, "partial_sum_expansion");
    if (n < f.max_freq()) {
        throw std::invalid_argument("partial_sum_expansion: n must cover deg(F)");
    }
    ExpansionResult res{std::vector<double>(static_cast<std::size_t>(n) + 1),
                        Spectrum(f.max_freq())};
    for (int i = 0; i <= n; ++i) {
        res.alphas[static_cast<std::size_t>(i)] =
            eta.coefficient(i).real() - eta.coefficient(i + 1).real();
    }
    // sum_{i=|k|}^{n} alpha_i + coeff(n+1) telescopes back to coeff(|k|)
    const double tail = eta.coefficient(n + 1).real();
    std::vector<double> suffix(static_cast<std::size_t>(n) + 2, tail);
    for (int i = n; i >= 0; --i) {
        suffix[static_cast<std::size_t>(i)] =
            suffix[static_cast<std::size_t>(i) + 1] + res.alphas[static_cast<std::size_t>(i)];
    }
    for (int k = -f.max_freq(); k <= f.max_freq(); ++k) {
        res.reconstruction.set_coeff(k, suffix[static_cast<std::size_t>(std::abs(k))] * f.coeff(k));
    }
    return res;
}

void SkewedScales::validate() const {
    const bool ladder_ok = sai_gap_lo < ssi_gap_lo && ssi_gap_lo < ou_ramp_lo &&
                           ou_ramp_lo < ou_ramp_hi && ou_ramp_hi < ssi_limit &&
                           ssi_limit < sai_limit;
    if (!ladder_ok) throw std::invalid_argument("SkewedScales: ladder ordering violated");
    if (!(q >= 1.0) || fb_mesh < 2 || fi_mesh < 2 || dprime_cap <= 0.0) {
        throw std::invalid_argument("SkewedScales: bad quadrature parameters");
    }
}

namespace {

struct FbNode {
    double half_in;   // c'
    double half_out;  // d'
    double weight;    // dgap * dd'
};

std::vector<FbNode> fb_nodes(double gap_lo, double limit, double gap_hi, int mesh,
                             double dprime_cap) {
    if (!(gap_lo > 0.0 && gap_lo < gap_hi && limit > 0.0)) {
        throw std::invalid_argument("fb: need 0 < gap_lo < gap_hi and limit > 0");
    }
    const double dmax = std::min(limit / 2, dprime_cap);
    std::vector<FbNode> nodes;
    const double dgap = (gap_hi - gap_lo) / mesh;
    for (int i = 0; i < mesh; ++i) {
        const double gap = gap_lo + (i + 0.5) * dgap;
        if (gap >= dmax) continue;  // c' > 0 forces d' > gap
        const double dd = (dmax - gap) / mesh;
        for (int j = 0; j < mesh; ++j) {
            const double dp = gap + (j + 0.5) * dd;
            nodes.push_back({dp - gap, dp, dgap * dd});
        }
    }
    if (nodes.empty()) throw std::invalid_argument("fb: empty integration region");
    return nodes;
}

}  // namespace

std::vector<double> fb_profile(double gap_lo, double limit, double gap_hi,
                               const GridFunction& b_fn, double q, int mesh,
                               double dprime_cap) {
    const auto nodes = fb_nodes(gap_lo, limit, gap_hi, mesh, dprime_cap);
    const std::size_t n = b_fn.size();
    std::vector<Complex> b_hat(b_fn.values().begin(), b_fn.values().end());
    detail::fft(b_hat, false);

    std::vector<double> out(n, 0.0);
    std::vector<Complex> work(n);
    for (const auto& node : nodes) {
        const SkewedSegment eta(-node.half_out, -node.half_in, node.half_in, node.half_out);
        auto eta_grid = sample_skewed(eta, b_fn.grid());
        std::vector<Complex> e_hat(eta_grid.values().begin(), eta_grid.values().end());
        detail::fft(e_hat, false);
        for (std::size_t j = 0; j < n; ++j) work[j] = b_hat[j] * e_hat[j];
        detail::fft(work, true);
        // (B circ-conv eta)(z) * h / area: the average of B at center z
        const double scale = kTwoPi / (static_cast<double>(n) * eta.area());
        for (std::size_t j = 0; j < n; ++j) {
            out[j] += std::pow(std::abs(work[j] * scale), q) * node.weight;
        }
    }
    const double pref = 1.0 / (gap_lo * gap_lo);
    for (double& v : out) v *= pref;
    return out;
}

double fb_functional(double gap_lo, double limit, double gap_hi, double z,
                     const GridFunction& b_fn, double q, int mesh, double dprime_cap) {
    const auto nodes = fb_nodes(gap_lo, limit, gap_hi, mesh, dprime_cap);
    double acc = 0.0;
    for (const auto& node : nodes) {
        const SkewedSegment eta(z - node.half_out, z - node.half_in, z + node.half_in,
                                z + node.half_out);
        acc += std::pow(std::abs(skew_average(eta, b_fn)), q) * node.weight;
    }
    return acc / (gap_lo * gap_lo);
}

double ssi(Interval iv, const GridFunction& b_fn, const SkewedScales& sc) {
    sc.validate();
    const double len = b_fn.grid().step() * static_cast<double>(iv.cells());
    const auto prof = fb_profile(sc.ssi_gap_lo * len, sc.ssi_limit * len, sc.ssi_limit * len,
                                 b_fn, sc.q, sc.fb_mesh, sc.dprime_cap);
    double acc = 0.0;
    for (std::size_t j = iv.lo; j < iv.hi; ++j) acc += prof[j];
    return acc * b_fn.grid().step();
}

double sai(Interval iv, const GridFunction& a_fn, const GridFunction& b_fn,
           const SkewedScales& sc) {
    sc.validate();
    if (!(a_fn.grid() == b_fn.grid())) throw std::invalid_argument("sai: grid mismatch");
    const double len = b_fn.grid().step() * static_cast<double>(iv.cells());
    const auto prof = fb_profile(sc.sai_gap_lo * len, sc.sai_limit * len, sc.sai_limit * len,
                                 b_fn, sc.q, sc.fb_mesh, sc.dprime_cap);
    double acc = 0.0;
    for (std::size_t j = iv.lo; j < iv.hi; ++j) {
        acc += prof[j] * std::pow(std::abs(1.0 - a_fn[j]), sc.q);
    }
    return acc * b_fn.grid().step();
}

bool in_ou(const SkewedSegment& eta, Interval iv, CircleGrid grid, const SkewedScales& sc) {
    const double len = grid.step() * static_cast<double>(iv.cells());
    const double lo = grid.point(iv.lo);
    const double hi = lo + len;
    const double ramp1 = eta.b() - eta.a();
    const double ramp2 = eta.d() - eta.c();
    const double ramp_min = sc.ou_ramp_lo * len;
    const double ramp_max = sc.ou_ramp_hi * len;
    if (ramp1 < ramp_min || ramp1 > ramp_max) return false;
    if (ramp2 < ramp_min || ramp2 > ramp_max) return false;
    if (eta.support_length() > len * (1.0 + 2.0 * sc.ou_ramp_hi) + 1e-12) return false;
    return eta.b() <= lo + 1e-12 && eta.c() >= hi - 1e-12;  // I inside the middle
}

double fi(Interval iv, const GridFunction& b_fn, const SkewedScales& sc) {
    sc.validate();
    const CircleGrid grid = b_fn.grid();
    const double len = grid.step() * static_cast<double>(iv.cells());
    const double x_lo = grid.point(iv.lo);
    const double x_hi = x_lo + len;
    const double ramp_min = sc.ou_ramp_lo * len;
    const double ramp_max = sc.ou_ramp_hi * len;
    const double total_max = len * (1.0 + 2.0 * sc.ou_ramp_hi);
    const int m = sc.fi_mesh;
    const double dr = (ramp_max - ramp_min) / m;

    double acc = 0.0;
    for (int i1 = 0; i1 < m; ++i1) {
        const double r1 = ramp_min + (i1 + 0.5) * dr;  // left ramp b-a
        for (int i2 = 0; i2 < m; ++i2) {
            const double r2 = ramp_min + (i2 + 0.5) * dr;  // right ramp d-c
            const double w_hi = total_max - r1 - r2;       // admissible middle widths
            if (w_hi <= len) continue;
            const double dw = (w_hi - len) / m;
            for (int i3 = 0; i3 < m; ++i3) {
                const double w = len + (i3 + 0.5) * dw;
                const double db = (w - len) / m;  // b ranges over [x_hi - w, x_lo]
                for (int i4 = 0; i4 < m; ++i4) {
                    const double b = x_hi - w + (i4 + 0.5) * db;
                    const SkewedSegment eta(b - r1, b, b + w, b + w + r2);
                    acc += std::pow(std::abs(skew_average(eta, b_fn)), sc.q) * dr * dr * dw * db;
                }
            }
        }
    }
    return acc / (len * len * len * len);
}

}  // namespace apw
