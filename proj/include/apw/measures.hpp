// Interval functionals on a fixed real profile A: the IA weight
// min(|I|, |int_I A|), the A0-measure (supremal weight of disjoint
// subinterval families) and the discrepancy norm.  Suprema are taken over
// grid-aligned intervals only, which approximates the continuum value
// from below -- the safe direction for every inequality consumed
// downstream.

#pragma once

#include <cstddef>
#include <vector>

#include "apw/circle_core.hpp"

namespace apw {

// Grid-aligned interval: cell index range [lo, hi), 0 <= lo < hi <= n.
// The full circle is {0, n}.
struct Interval {
    std::size_t lo = 0;
    std::size_t hi = 0;

    std::size_t cells() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Cached prefix sums of Re A over the grid; O(1) interval integrals and
// means.  All measure functionals reduce the input to its real part once,
// here.
class RealPrefix {
public:
    explicit RealPrefix(const GridFunction& a);

    std::size_t size() const { return values_.size(); }
    double step() const { return step_; }
    double cell(std::size_t j) const { return values_[j]; }

    double length(Interval iv) const { return step_ * static_cast<double>(iv.cells()); }
    // step * sum of samples over [lo, hi)
    double integral(Interval iv) const { return prefix_[iv.hi] - prefix_[iv.lo]; }
    double mean(Interval iv) const { return integral(iv) / length(iv); }

    void check(Interval iv) const;

private:
    double step_;
    std::vector<double> values_;
    std::vector<double> prefix_;
};

// min(|I|, |int_I A|)
double ia_weight(Interval iv, const RealPrefix& a);

// Supremum of sum ia_weight(I_i) over families of disjoint grid-aligned
// subintervals; dynamic programming over cut points.
double a0_measure(Interval iv, const RealPrefix& a);

// Reference implementation: explicit enumeration of every disjoint
// family.  Exponential; intended for intervals of <= ~16 cells.
double a0_measure_enumerated(Interval iv, const RealPrefix& a);

struct DiscrepancyResult {
    double value = 0.0;
    Interval attaining;  // shortest maximizing subinterval, leftmost on ties
};

// sup over grid-aligned I1 c I with |I1| >= t|I| of |mean_{I1} A - mean_I A|.
// t in (0,1).  Throws ResolutionError when no admissible subinterval exists.
DiscrepancyResult discrepancy(Interval iv, const RealPrefix& a, double t);

// Convenience wrappers building the prefix on the fly.
double ia_weight(Interval iv, const GridFunction& a);
double a0_measure(Interval iv, const GridFunction& a);
DiscrepancyResult discrepancy(Interval iv, const GridFunction& a, double t);

}  // namespace apw
