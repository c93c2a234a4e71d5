#include "apw/signatures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace apw {

bool quadruple_valid(const Quadruple& q, double rel_tol) {
    if (q.l < 0 || q.r < 0 || q.L < 0 || q.R < 0) return false;
    const double lhs = q.l * q.L;
    const double rhs = q.r * q.R;
    return std::abs(lhs - rhs) <= rel_tol * std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

double signature_sum(const std::vector<Signature>& sigs, double x, bool left_side) {
    double acc = 0.0;
    for (const auto& s : sigs) {
        const double start = left_side ? s.ls : s.rs;
        if (x >= start && x < start + s.len) acc += s.w;  // half-open cells
    }
    return acc;
}

ResidualReport reconstruction_residual(const Quadruple& q, const std::vector<Signature>& sigs,
                                       std::size_t probes) {
    if (probes < 2) throw std::invalid_argument("reconstruction_residual: probes too few");
    const double span = std::max(q.L, q.R);
    ResidualReport rep;
    for (std::size_t j = 0; j < probes; ++j) {
        // offset probe points so samples do not sit exactly on cut points
        const double x = span * (static_cast<double>(j) + 0.37) / static_cast<double>(probes);
        const double left_target = (x >= 0.0 && x < q.L) ? q.l : 0.0;
        const double right_target = (x >= 0.0 && x < q.R) ? q.r : 0.0;
        rep.left = std::max(rep.left, std::abs(left_target - signature_sum(sigs, x, true)));
        rep.right = std::max(rep.right, std::abs(right_target - signature_sum(sigs, x, false)));
    }
    return rep;
}

std::vector<Signature> refine_signatures(const std::vector<Signature>& sigs, double L, double R) {
    const double floor_len = std::min(L, R) / 3.0;
    std::vector<Signature> out;
    out.reserve(sigs.size());
    for (const auto& s : sigs) {
        if (s.len >= floor_len) {
            out.push_back(s);
            continue;
        }
        // replace with (len + floor, w) minus a (floor, w) correction; start
        // rules per side keep the difference exactly equal to the original
        Signature grown{s.len + floor_len, s.w, 0.0, 0.0};
        Signature patch{floor_len, -s.w, 0.0, 0.0};
        if (s.ls >= floor_len) {
            grown.ls = s.ls - floor_len;
            patch.ls = s.ls - floor_len;
        } else {
            grown.ls = s.ls;
            patch.ls = s.ls + s.len;
        }
        if (s.rs >= floor_len) {
            grown.rs = s.rs - floor_len;
            patch.rs = s.rs - floor_len;
        } else {
            grown.rs = s.rs;
            patch.rs = s.rs + s.len;
        }
        out.push_back(grown);
        out.push_back(patch);
    }
    return out;
}

SigfinalResult sigfinal(double beta, double eps, int cap_exp) {
    if (cap_exp < 1) throw std::invalid_argument("sigfinal: cap_exp >= 1 required");
    const double cap = std::pow(2.0, cap_exp);
    if (!(beta >= 1.0 / cap && beta <= cap)) {
        throw std::invalid_argument("sigfinal: beta outside the configured ratio bounds");
    }
    SigfinalResult res;
    Quadruple q{1.0, beta, 1.0, 1.0 / beta};
    auto sigs = decompose(q, eps, &res.stats);
    res.refined = refine_signatures(sigs, q.L, q.R);
    res.tuples.reserve(res.refined.size());
    for (const auto& s : res.refined) {
        res.tuples.push_back({s.w / s.len, s.ls, s.ls + s.len, s.rs, s.rs + s.len});
    }
    return res;
}

double sigfinal_reconstruct(const SkewedSegment& eta, const std::vector<FiveTuple>& tuples,
                            double x) {
    const double ramp = eta.b() - eta.a();
    double acc = 0.0;
    for (const auto& t : tuples) {
        const double len = t.bc - t.ac;
        const SkewedSegment part(eta.a() + ramp * t.ac, eta.a() + ramp * t.bc,
                                 eta.c() + ramp * t.cc, eta.c() + ramp * t.dc);
        acc += t.alpha * len * len * part.eval(x);
    }
    return acc;
}

std::string signatures_to_csv(const std::vector<Signature>& sigs) {
    std::string out = "len,w,ls,rs\n";
    char buf[160];
    for (const auto& s : sigs) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", s.len, s.w, s.ls, s.rs);
        out += buf;
    }
    return out;
}

std::vector<Signature> signatures_from_csv(const std::string& text) {
    std::vector<Signature> sigs;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) {  // header
            first = false;
            continue;
        }
        if (line.empty()) continue;
        Signature s;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &s.len, &s.w, &s.ls, &s.rs) != 4) {
            throw std::invalid_argument("signatures_from_csv: malformed row: " + line);
        }
        sigs.push_back(s);
    }
    return sigs;
}

}  // namespace apw
