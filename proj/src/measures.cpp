#include "apw/measures.hpp"

#include <algorithm>
#include <cmath>

namespace apw {

RealPrefix::RealPrefix(const GridFunction& a) : step_(a.grid().step()) {
    const std::size_t n = a.size();
    values_.resize(n);
    prefix_.resize(n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        values_[j] = a[j].real();
        prefix_[j + 1] = prefix_[j] + step_ * values_[j];
    }
}

void RealPrefix::check(Interval iv) const {
    if (iv.lo >= iv.hi || iv.hi > size()) {
        throw std::invalid_argument("interval out of range or empty");
    }
}

double ia_weight(Interval iv, const RealPrefix& a) {
    a.check(iv);
    return std::min(a.length(iv), std::abs(a.integral(iv)));
}

double a0_measure(Interval iv, const RealPrefix& a) {
    a.check(iv);
    const std::size_t m = iv.cells();
    // best[j]: optimal weight over families inside the first j cells
    std::vector<double> best(m + 1, 0.0);
    for (std::size_t j = 1; j <= m; ++j) {
        best[j] = best[j - 1];
        for (std::size_t i = 0; i < j; ++i) {
            const double w = best[i] + ia_weight({iv.lo + i, iv.lo + j}, a);
            if (w > best[j]) best[j] = w;
        }
    }
    return best[m];
}

namespace {

// Enumerates every disjoint family starting at cell `pos` (no memoization).
double enumerate_families(std::size_t pos, Interval iv, const RealPrefix& a) {
    if (pos >= iv.hi) return 0.0;
    double best = enumerate_families(pos + 1, iv, a);  // pos uncovered
    for (std::size_t end = pos + 1; end <= iv.hi; ++end) {
        const double w = ia_weight({pos, end}, a) + enumerate_families(end, iv, a);
        best = std::max(best, w);
    }
    return best;
}

}  // namespace

double a0_measure_enumerated(Interval iv, const RealPrefix& a) {
    a.check(iv);
    return enumerate_families(iv.lo, iv, a);
}

DiscrepancyResult discrepancy(Interval iv, const RealPrefix& a, double t) {
    a.check(iv);
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("discrepancy: t in (0,1) required");
    const std::size_t m = iv.cells();
    auto min_len = static_cast<std::size_t>(
        std::max(1.0, std::ceil(t * static_cast<double>(m) - 1e-9)));
    if (min_len > m) throw ResolutionError("discrepancy: no admissible subinterval on grid");

    const double base = a.mean(iv);
    DiscrepancyResult res;
    res.attaining = iv;
    // ascending length then position: the first maximum wins, so the
    // attaining interval is the shortest, leftmost one.  Deviations within
    // 1e-12 relative are ties (prefix-sum rounding).
    for (std::size_t len = min_len; len <= m; ++len) {
        for (std::size_t lo = iv.lo; lo + len <= iv.hi; ++lo) {
            const Interval sub{lo, lo + len};
            const double dev = std::abs(a.mean(sub) - base);
            if (dev > res.value + 1e-12 * (1.0 + dev)) {
                res.value = dev;
                res.attaining = sub;
            }
        }
    }
    return res;
}

double ia_weight(Interval iv, const GridFunction& a) { return ia_weight(iv, RealPrefix(a)); }

double a0_measure(Interval iv, const GridFunction& a) { return a0_measure(iv, RealPrefix(a)); }

DiscrepancyResult discrepancy(Interval iv, const GridFunction& a, double t) {
    return discrepancy(iv, RealPrefix(a), t);
}

}  // namespace apw
