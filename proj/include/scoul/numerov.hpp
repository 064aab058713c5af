#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "scoul/potentials.hpp"
#include "scoul/quantum_state.hpp"
#include "scoul/rational.hpp"

namespace scoul {

struct NoBoundStateInBracket : std::runtime_error {
    NoBoundStateInBracket() : std::runtime_error("no bound state in bracket") {}
};

struct GridTooCoarse : std::runtime_error {
    GridTooCoarse() : std::runtime_error("grid too coarse") {}
};

struct RadialGrid {
    double r_min;
    double r_max;
    int steps;

    RadialGrid(double rmin, double rmax, int n) : r_min(rmin), r_max(rmax), steps(n) {
        if (!(0 < r_min && r_min < r_max)) throw std::invalid_argument("need 0 < r_min < r_max");
        if (steps < 1000) throw std::invalid_argument("grid needs at least 1000 steps");
    }

    double spacing() const { return (r_max - r_min) / steps; }

    // Coulombic length scaling keeps the defaults meaningful across parameters.
    static RadialGrid coulombic(double m, double g, int principal, int steps = 200000) {
        double scale = principal * principal / (m * g);
        return RadialGrid(1e-6 * scale, 50.0 * scale, steps);
    }
};

struct EigenResult {
    double energy = 0;
    int nodes_found = 0;
    int iterations = 0;
    double residual = 0;  // log-derivative mismatch at the matching point
};

namespace detail {

// Closed form lowered to doubles once, instead of per grid point.
struct PotentialEval {
    PotentialKind kind;
    double g;
    double lam;

    explicit PotentialEval(const ScreenedPotentialSpec& spec)
        : kind(spec.kind), g(to_double(spec.g)), lam(to_double(spec.lambda)) {}

    double operator()(double r) const {
        switch (kind) {
            case PotentialKind::coulomb:
                return -g / r;
            case PotentialKind::yukawa:
                return -g * std::exp(-lam * r) / r;
            case PotentialKind::hulthen:
                return lam == 0.0 ? -g / r : -g * lam / std::expm1(lam * r);
            case PotentialKind::exp_cosine:
                return -g * std::exp(-lam * r) * std::cos(lam * r) / r;
            default:
                throw std::invalid_argument("custom potential has no closed form");
        }
    }
};

// Outward Numerov sweep from U ~ r^{l+1}; returns the interior node count.
inline int count_nodes_outward(const PotentialEval& pot, double m, int l,
                               const RadialGrid& grid, double E) {
    const int n = grid.steps;
    const double h = grid.spacing();
    const double h2_12 = h * h / 12.0;
    const double ll1 = static_cast<double>(l) * (l + 1);
    auto w_at = [&](int j) {
        double r = grid.r_min + j * h;
        return 2.0 * m * (pot(r) - E) + ll1 / (r * r);
    };
    double r0 = grid.r_min, r1 = grid.r_min + h;
    // two-term Frobenius seed: U ~ r^{l+1}(1 - m*g*r/(l+1)) for a -g/r core
    double c1 = -m * pot.g / (l + 1);
    double u_prev = std::pow(r0, l + 1) * (1.0 + c1 * r0);
    double u_cur = std::pow(r1, l + 1) * (1.0 + c1 * r1);
    double w_prev = w_at(0), w_cur = w_at(1);
    int nodes = 0;
    for (int j = 1; j < n; ++j) {
        double w_next = w_at(j + 1);
        double u_next = (2.0 * u_cur * (1.0 + 5.0 * h2_12 * w_cur) -
                         u_prev * (1.0 - h2_12 * w_prev)) /
                        (1.0 - h2_12 * w_next);
        if (u_next == 0.0 || u_next * u_cur < 0.0) ++nodes;
        if (std::fabs(u_next) > 1e250) {  // rescale; positive factor keeps node signs
            u_next *= 1e-250;
            u_cur *= 1e-250;
        }
        u_prev = u_cur;
        u_cur = u_next;
        w_prev = w_cur;
        w_cur = w_next;
    }
    return nodes;
}

// Full two-sided sweep; returns the normalized log-derivative mismatch
// (u'_out - u'_in)/u at the matching index.
inline double matching_mismatch(const PotentialEval& pot, double m, int l,
                                const RadialGrid& grid, double E) {
    const int n = grid.steps;
    const double h = grid.spacing();
    const double h2_12 = h * h / 12.0;
    const double ll1 = static_cast<double>(l) * (l + 1);
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        double r = grid.r_min + j * h;
        w[static_cast<std::size_t>(j)] = 2.0 * m * (pot(r) - E) + ll1 / (r * r);
    }
    // matching point: outermost classical turning point, clamped to the interior
    int mc = n / 2;
    for (int j = n; j >= 0; --j)
        if (w[static_cast<std::size_t>(j)] <= 0.0) {
            mc = j;
            break;
        }
    if (mc < 2) mc = 2;
    if (mc > n - 2) mc = n - 2;

    std::vector<double> uo(static_cast<std::size_t>(mc) + 2);
    double c1 = -m * pot.g / (l + 1);
    uo[0] = std::pow(grid.r_min, l + 1) * (1.0 + c1 * grid.r_min);
    uo[1] = std::pow(grid.r_min + h, l + 1) * (1.0 + c1 * (grid.r_min + h));
    for (int j = 1; j <= mc; ++j) {
        uo[static_cast<std::size_t>(j) + 1] =
            (2.0 * uo[static_cast<std::size_t>(j)] * (1.0 + 5.0 * h2_12 * w[static_cast<std::size_t>(j)]) -
             uo[static_cast<std::size_t>(j) - 1] * (1.0 - h2_12 * w[static_cast<std::size_t>(j) - 1])) /
            (1.0 - h2_12 * w[static_cast<std::size_t>(j) + 1]);
        if (std::fabs(uo[static_cast<std::size_t>(j) + 1]) > 1e250)
            for (int t = 0; t <= j + 1; ++t) uo[static_cast<std::size_t>(t)] *= 1e-250;
    }
    std::vector<double> ui(static_cast<std::size_t>(n) + 1);
    double kappa = std::sqrt(std::max(2.0 * m * (-E), 1e-300));
    ui[static_cast<std::size_t>(n)] = 1e-20;
    ui[static_cast<std::size_t>(n) - 1] = 1e-20 * std::exp(kappa * h);
    for (int j = n - 1; j >= mc; --j) {
        ui[static_cast<std::size_t>(j) - 1] =
            (2.0 * ui[static_cast<std::size_t>(j)] * (1.0 + 5.0 * h2_12 * w[static_cast<std::size_t>(j)]) -
             ui[static_cast<std::size_t>(j) + 1] * (1.0 - h2_12 * w[static_cast<std::size_t>(j) + 1])) /
            (1.0 - h2_12 * w[static_cast<std::size_t>(j) - 1]);
        if (std::fabs(ui[static_cast<std::size_t>(j) - 1]) > 1e250)
            for (int t = n; t >= j - 1; --t) ui[static_cast<std::size_t>(t)] *= 1e-250;
    }
    double so = uo[static_cast<std::size_t>(mc)];
    double si = ui[static_cast<std::size_t>(mc)];
    if (so == 0.0 || si == 0.0) return std::numeric_limits<double>::infinity();
    double dout = (uo[static_cast<std::size_t>(mc) + 1] - uo[static_cast<std::size_t>(mc) - 1]) / (2.0 * h * so);
    double din = (ui[static_cast<std::size_t>(mc) + 1] - ui[static_cast<std::size_t>(mc) - 1]) / (2.0 * h * si);
    return dout - din;
}

inline EigenResult solve_on_grid(const ScreenedPotentialSpec& spec, double m,
                                 const QuantumState& state, const RadialGrid& grid, double tol) {
    const PotentialEval pot(spec);
    const int n_target = state.n;
    const double g = pot.g;
    double e_lo = -0.7 * m * g * g;
    double e_hi = -1e-12 * m * g * g;
    int iterations = 0;
    auto nodes = [&](double E) {
        ++iterations;
        return count_nodes_outward(pot, m, state.l, grid, E);
    };
    if (nodes(e_lo) > n_target) throw NoBoundStateInBracket();
    if (nodes(e_hi) <= n_target) throw NoBoundStateInBracket();
    // bisect on node count: eigenvalue sits at the n -> n+1 transition
    double lo = e_lo, hi = e_hi;
    while (hi - lo > std::max(tol, 1e-16 * std::fabs(lo))) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (nodes(mid) <= n_target)
            lo = mid;
        else
            hi = mid;
    }
    // refine on the log-derivative mismatch when it brackets a sign change
    double flo = matching_mismatch(pot, m, state.l, grid, lo);
    double fhi = matching_mismatch(pot, m, state.l, grid, hi);
    double energy;
    if (std::isfinite(flo) && std::isfinite(fhi) && flo * fhi < 0.0) {
        double a = lo, b = hi, fa = flo;
        for (int it = 0; it < 80 && b - a > 1e-16 * std::fabs(a); ++it) {
            ++iterations;
            double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            double fm = matching_mismatch(pot, m, state.l, grid, mid);
            if (std::isfinite(fm) && fa * fm <= 0.0)
                b = mid;
            else {
                a = mid;
                fa = fm;
            }
        }
        energy = 0.5 * (a + b);
    } else {
        energy = 0.5 * (lo + hi);
    }
    EigenResult res;
    res.energy = energy;
    res.nodes_found = count_nodes_outward(pot, m, state.l, grid, energy - 0.25 * tol);
    res.iterations = iterations;
    res.residual = std::fabs(matching_mismatch(pot, m, state.l, grid, energy));
    return res;
}

}  // namespace detail

// Shooting eigensolver for U'' = [2m(V - E) + l(l+1)/r^2] U.  Includes the
// Richardson consistency check against a grid with doubled step count.
inline EigenResult solve(const ScreenedPotentialSpec& spec, double m, const QuantumState& state,
                         const RadialGrid& grid, double tol) {
    spec.validate();
    if (!has_closed_form(spec))
        throw std::invalid_argument("numerical solve needs a closed-form potential");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    EigenResult coarse = detail::solve_on_grid(spec, m, state, grid, tol);
    RadialGrid fine(grid.r_min, grid.r_max, grid.steps * 2);
    EigenResult refined = detail::solve_on_grid(spec, m, state, fine, tol);
    if (std::fabs(refined.energy - coarse.energy) > 10.0 * tol) throw GridTooCoarse();
    refined.iterations += coarse.iterations;
    if (refined.nodes_found != state.n) throw NoBoundStateInBracket();
    return refined;
}

// Closed-form s-wave spectrum of the Hulthen potential
// V(r) = -g*lam*e^{-lam r}/(1 - e^{-lam r}):
//   E_n = -(2mg - p^2 lam)^2 / (8 m p^2),  p = n + 1,
// valid while 2mg > p^2 lam (the state dissolves at equality).
inline Rational hulthen_exact_s_wave(const Rational& g, const Rational& lambda, const Rational& m,
                                     int n_radial) {
    if (n_radial < 0) throw std::invalid_argument("negative radial quantum number");
    if (g <= 0 || m <= 0 || lambda < 0) throw std::invalid_argument("bad Hulthen parameters");
    const Rational p = n_radial + 1;
    Rational core = 2 * m * g - p * p * lambda;
    if (core < 0) throw std::domain_error("state dissolved: no Hulthen bound state at this screening");
    return -core * core / (8 * m * p * p);
}

}  // namespace scoul
