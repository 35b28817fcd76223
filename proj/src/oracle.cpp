#include "takagi/oracle.hpp"

#include "takagi/takagi.hpp"

#include <algorithm>
#include <cmath>

namespace takagi {

namespace {

std::size_t coarse_terms(double v, double tail_tol) {
    double av = std::abs(v);
    if (av == 0) return 1;
    double k = std::log(2.0 * (1.0 - av) * tail_tol) / std::log(av);
    return k <= 1 ? 1 : static_cast<std::size_t>(std::ceil(k)) + 1;
}

double tv_double(double x, double v, std::size_t terms) {
    double acc = 0, vp = 1, y = x - std::floor(x);
    for (std::size_t n = 0; n < terms; ++n) {
        acc += vp * (y <= 0.5 ? y : 1.0 - y);
        vp *= v;
        y += y;
        if (y >= 1) y -= 1;
    }
    return acc;
}

/// Bits of x-resolution needed so that the value gap at the optimum drops
/// below target: T near an isolated extremum varies like |v|^{log2(1/dx)}.
unsigned needed_bits(double v, double target) {
    double av = std::abs(v);
    if (av < 0.5) return 52;
    unsigned bits = static_cast<unsigned>(std::ceil(std::log(target) / std::log(av))) + 8;
    return std::max(52u, bits);
}

struct Cluster {
    double x;
    double value;  // signed objective (negated for Min)
};

/// Local grid descent on [lo, hi]; returns the best point and signed value.
Cluster refine_interval(double v, double sgn, Real lo, Real hi, unsigned rounds,
                        unsigned points_per_round) {
    EvalParams p;
    p.v = v;
    p.abs_tol = 1e-11;
    p.max_terms = 100000;
    Real best_x = (lo + hi) / 2;
    Real best_val = sgn * t_v(best_x, p).first;
    for (unsigned r = 0; r < rounds; ++r) {
        Real h = (hi - lo) / points_per_round;
        if (h == 0) break;
        Real x = lo;
        for (unsigned i = 0; i <= points_per_round; ++i, x += h) {
            Real xc = x;
            if (xc < 0) xc = Real(0);
            if (xc > 1) xc = Real(1);
            Real val = sgn * t_v(xc, p).first;
            if (val > best_val) {
                best_val = val;
                best_x = xc;
            }
        }
        lo = best_x - 2 * h;
        hi = best_x + 2 * h;
        if (lo < 0) lo = Real(0);
        if (hi > 1) hi = Real(1);
    }
    return {static_cast<double>(best_x), static_cast<double>(best_val)};
}

Cluster refine_cluster(double v, double sgn, double x0, double radius, unsigned refine_rounds) {
    unsigned bits = needed_bits(v, 1e-7);
    // each round of 64 cells gains 4 bits over the +-2h carryover
    unsigned rounds = std::max(refine_rounds, (bits - std::min(bits, 14u)) / 4 + 1);
    PrecisionGuard guard(std::max(200u, bits + 64));
    return refine_interval(v, sgn, Real(x0) - radius, Real(x0) + radius, rounds, 64);
}

}  // namespace

GridExtremum grid_extremum(double v, ExtrKind kind, std::size_t grid_size,
                           unsigned refine_rounds) {
    if (grid_size < (1u << 10)) throw std::invalid_argument("grid_extremum: grid too small");
    if (!(std::abs(v) < 1)) throw std::invalid_argument("grid_extremum: |v| < 1");
    const double sgn = kind == ExtrKind::Max ? 1.0 : -1.0;
    const double tail_tol = 1e-9;
    const std::size_t terms = coarse_terms(v, tail_tol);
    const double cell = 1.0 / static_cast<double>(grid_size);

    std::vector<double> vals(grid_size + 1);
    double best = -1e300;
    for (std::size_t i = 0; i <= grid_size; ++i) {
        vals[i] = sgn * tv_double(static_cast<double>(i) * cell, v, terms);
        best = std::max(best, vals[i]);
    }

    // keep everything within the slack of the best, grouped by adjacency
    // (gaps of up to 4 cells merge)
    double var_bound = std::abs(v) < 0.5 ? cell / (1.0 - 2.0 * std::abs(v)) : 1e-3;
    double slack = 10.0 * tail_tol + var_bound;
    std::vector<Cluster> clusters;
    long last_kept = -100;
    for (std::size_t i = 0; i <= grid_size; ++i) {
        if (vals[i] < best - slack) continue;
        if (static_cast<long>(i) - last_kept > 4) {
            clusters.push_back({static_cast<double>(i) * cell, vals[i]});
        } else if (vals[i] > clusters.back().value) {
            clusters.back() = {static_cast<double>(i) * cell, vals[i]};
        }
        last_kept = static_cast<long>(i);
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.value > b.value; });
    if (clusters.size() > 64) clusters.resize(64);

    for (auto& c : clusters) c = refine_cluster(v, sgn, c.x, 2 * cell, refine_rounds);

    double refined_best = -1e300;
    for (const auto& c : clusters) refined_best = std::max(refined_best, c.value);

    GridExtremum out;
    out.value = sgn * refined_best;
    double keep = 1e-6 + 10 * tail_tol;
    for (const auto& c : clusters)
        if (c.value >= refined_best - keep) out.argpoints.push_back(c.x);
    std::sort(out.argpoints.begin(), out.argpoints.end());
    return out;
}

double local_extremum_near(double v, ExtrKind kind, double x0, double radius) {
    const double sgn = kind == ExtrKind::Max ? 1.0 : -1.0;
    Cluster c = refine_cluster(v, sgn, x0, radius, 3);
    return sgn * c.value;
}

std::vector<std::int8_t> independent_consistent_prefix(const RealPoint& w, std::size_t max_len,
                                                       Mode mode) {
    if (w.is_floating())
        throw std::invalid_argument("independent prefix needs an exact point");
    std::vector<std::int8_t> signs{1};
    while (signs.size() < max_len) {
        // evaluate S_{n-1} at w from scratch
        RatPoly s = RatPoly::from_signs(signs);
        int sg = w.sign_of(s);
        if (sg == 0) return signs;  // consistent polynomial found
        signs.push_back(static_cast<std::int8_t>(mode == Mode::Consistent ? -sg : sg));
    }
    return signs;
}

}  // namespace takagi
