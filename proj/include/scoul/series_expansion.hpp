#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scoul/energy_series.hpp"
#include "scoul/laurent_table.hpp"
#include "scoul/potential_series.hpp"
#include "scoul/quantum_state.hpp"
#include "scoul/rational.hpp"

namespace scoul {

// Order-by-order solution of the log-derivative hierarchy.
//
// With C(r) = hbar^-1 sum_k C_k(r) hbar^2k and E = hbar^-2 sum_k E_k hbar^2k,
// the Riccati equation splits into one equation per (hbar order k, power
// r^{i-k}):
//
//   (i-k+1) C[k-1][i] + sum_{j=1}^{k-1} sum_{p=0}^{i} C[j][p] C[k-j][i-p]
//     + 2 C0 C[k][i]
//   = 2m V_i d(k,1) + l(l+1) d(k,2) d(i,0) - 2m E_k d(i,k),
//
// closed by the residue constraint C[k][k-1] = N d(k,1).  The system is
// triangular with pivot 2*C0 != 0; the only subtlety is that the diagonal
// entry C[k][k] and E_k are fixed one stage later, by the residue constraint
// of order k+1.

struct ExpansionResult {
    EnergySeries energies;
    LaurentTable table;
};

struct ResidualReport {
    Rational max_abs;
    std::size_t checked = 0;   // monomials fully determined by order-<=K data
    std::size_t excluded = 0;  // monomials touched by truncated data, skipped
};

// Base case: E_0 = -m V_0^2 / (2 N^2), C0 = m V_0 / N (exact, negative).
inline std::pair<Rational, Rational> leading_order(const PotentialSeries& pot,
                                                   const QuantumState& state) {
    const Rational& v0 = pot.v(0);
    const int N = state.principal_multiplicity();
    Rational c0 = pot.mass * v0 / N;
    Rational e0 = -pot.mass * v0 * v0 / (2 * Rational(N) * N);
    return {e0, c0};
}

namespace detail {

class HierarchySolver {
  public:
    HierarchySolver(const PotentialSeries& pot, const QuantumState& state, int order)
        : pot_(pot),
          state_(state),
          K_(order),
          N_(state.principal_multiplicity()),
          table_(order),
          energies_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("expansion order must be >= 0");
        if (pot.max_index() < order)
            throw std::invalid_argument("insufficient potential coefficients: need V_0..V_" +
                                        std::to_string(order) + ", got " +
                                        std::to_string(pot.max_index() + 1));
        auto [e0, c0] = leading_order(pot_, state_);
        c0_ = c0;
        energies_[0] = e0;
        table_.at(0, 0) = c0_;
    }

    ExpansionResult run() {
        if (K_ >= 1) {
            table_.at(1, 0) = N_;  // residue of C_1: the full zero multiplicity
            fill_row(1);
            for (int k = 2; k <= K_; ++k) {
                close_previous_diagonal(k);
                fix_energy(k - 1);
                fill_row(k);
            }
            close_previous_diagonal(K_ + 1);
            fix_energy(K_);
        }
        EnergySeries es;
        es.values = std::move(energies_);
        es.n = state_.n;
        es.l = state_.l;
        es.potential_label = pot_.label;
        return {std::move(es), std::move(table_)};
    }

  private:
    // sum_{j=1}^{k-1} sum_{p=0}^{i} C[j][p] C[k-j][i-p], rows clamped to the table
    Rational cross(int k, int i) const {
        Rational acc = 0;
        for (int j = 1; j <= k - 1; ++j) {
            if (j > K_ || k - j > K_) continue;  // only reachable at k = K_+1 via j in range
            for (int p = 0; p <= i; ++p) acc += table_.at(j, p) * table_.at(k - j, i - p);
        }
        return acc;
    }

    Rational deriv_term(int k, int i) const {
        if (k <= 1) return 0;  // C_0 is constant
        return Rational(i - k + 1) * table_.at(k - 1, i);
    }

    Rational rhs_without_energy(int k, int i) const {
        Rational r = 0;
        if (k == 1) r += 2 * pot_.mass * pot_.v(i);
        if (k == 2 && i == 0) r += Rational(state_.l) * (state_.l + 1);
        return r;
    }

    // Equation (k, k-1) with C[k][k-1] pinned to its residue value closes the
    // previous order's diagonal entry C[k-1][k-1] (coefficient 2N).
    void close_previous_diagonal(int k) {
        const int i = k - 1;
        Rational partial = cross(k, i);  // diagonal cell still holds 0
        Rational residue = 0;            // C[k][k-1] = 0 for every k >= 2
        Rational x = (rhs_without_energy(k, i) - partial - 2 * c0_ * residue) / (2 * Rational(N_));
        table_.at(k - 1, k - 1) = x;
        if (k <= K_) table_.at(k, k - 1) = 0;
    }

    // Equation (k, k): the only slot where E_k enters.
    void fix_energy(int k) {
        if (k == 0) return;
        Rational lhs = deriv_term(k, k) + cross(k, k) + 2 * c0_ * table_.at(k, k);
        Rational r0 = rhs_without_energy(k, k);
        energies_[static_cast<std::size_t>(k)] = (r0 - lhs) / (2 * pot_.mass);
    }

    // All remaining entries of row k: solved directly off the pivot 2*C0.
    void fill_row(int k) {
        for (int i = 0; i <= K_; ++i) {
            if (i == k - 1 || i == k) continue;
            Rational val =
                (rhs_without_energy(k, i) - deriv_term(k, i) - cross(k, i)) / (2 * c0_);
            table_.at(k, i) = val;
        }
    }

    const PotentialSeries& pot_;
    const QuantumState& state_;
    int K_;
    int N_;
    Rational c0_;
    LaurentTable table_;
    std::vector<Rational> energies_;
};

}  // namespace detail

inline ExpansionResult expand(const PotentialSeries& pot, const QuantumState& state, int order) {
    return detail::HierarchySolver(pot, state, order).run();
}

// Independent verification: substitute the truncated series directly into the
// Riccati equation and collect every monomial hbar^{2b-2} r^{i-b}.  Monomials
// with contributions from truncated (order > K) data are excluded and counted.
// With exact arithmetic the maximum residual over the checked cone is 0.
inline ResidualReport riccati_residual(const PotentialSeries& pot, const QuantumState& state,
                                       const LaurentTable& table, const EnergySeries& energies) {
    const int K = table.order();
    if (energies.order() != K)
        throw std::invalid_argument("table and energy series have mismatched orders");
    if (energies.n != state.n || energies.l != state.l)
        throw std::invalid_argument("energy series was produced for a different state");

    // key: (hbar bucket b, column index i), value: accumulated coefficient
    std::map<std::pair<int, int>, Rational> acc;
    auto add = [&acc](int b, int i, const Rational& v) { acc[{b, i}] += v; };

    // hbar C'(r): C_k' feeds bucket k+1 at the same column index
    for (int k = 0; k <= K; ++k) {
        if (k == 0) continue;  // constant row
        for (int i = 0; i <= K; ++i) add(k + 1, i, Rational(i - k) * table.at(k, i));
    }
    // C(r)^2
    for (int j = 0; j <= K; ++j) {
        for (int k = 0; k <= K; ++k) {
            const int b = j + k;
            const int pj_max = (j == 0) ? 0 : K;
            const int pk_max = (k == 0) ? 0 : K;
            for (int p = 0; p <= pj_max; ++p) {
                const Rational a = table.coeff(j, p);
                for (int q = 0; q <= pk_max; ++q) add(b, p + q, a * table.coeff(k, q));
            }
        }
    }
    // -hbar^2 l(l+1)/r^2
    add(2, 0, -Rational(state.l) * (state.l + 1));
    // -2mV(r)
    for (int i = 0; i <= pot.max_index(); ++i) add(1, i, -2 * pot.mass * pot.v(i));
    // +2mE
    for (int k = 0; k <= K; ++k) add(k, k, 2 * pot.mass * energies.at(k));

    ResidualReport report;
    report.max_abs = 0;
    for (const auto& [key, value] : acc) {
        auto [b, i] = key;
        if (b <= K && i <= K) {
            ++report.checked;
            Rational a = abs(value);
            if (a > report.max_abs) report.max_abs = a;
        } else {
            ++report.excluded;
        }
    }
    return report;
}

// C(r) at hbar = 1, truncated at hbar-order `order`.
inline Rational log_derivative_eval(const LaurentTable& table, const Rational& r, int order) {
    if (r <= 0) throw std::invalid_argument("log-derivative evaluation needs r > 0");
    if (order < 0 || order > table.order())
        throw std::invalid_argument("evaluation order exceeds table order");
    Rational total = table.at(0, 0);
    Rational inv_rk = 1;
    for (int k = 1; k <= order; ++k) {
        inv_rk /= r;
        Rational row = 0;
        Rational ri = 1;
        for (int i = 0; i <= table.order(); ++i) {
            row += table.at(k, i) * ri;
            ri *= r;
        }
        total += inv_rk * row;
    }
    return total;
}

inline double log_derivative_eval(const LaurentTable& table, double r, int order) {
    if (r <= 0) throw std::invalid_argument("log-derivative evaluation needs r > 0");
    if (order < 0 || order > table.order())
        throw std::invalid_argument("evaluation order exceeds table order");
    double total = to_double(table.at(0, 0));
    for (int k = 1; k <= order; ++k) {
        double row = 0;
        for (int i = table.order(); i >= 0; --i) row = row * r + to_double(table.at(k, i));
        total += row * std::pow(r, -k);
    }
    return total;
}

// Contract check: E_k depends only on m, n, l, V_0..V_k.  Recomputes the
// series at order K+1 with V_{K+1} bumped by one and compares E_0..E_K.
inline bool dependence_cone_check(const PotentialSeries& pot, const QuantumState& state,
                                  int order) {
    if (pot.max_index() < order + 1)
        throw std::invalid_argument("dependence cone check needs V_0..V_{K+1}");
    ExpansionResult base = expand(pot, state, order + 1);
    PotentialSeries bumped = pot;
    bumped.coeffs[static_cast<std::size_t>(order) + 1] += 1;
    ExpansionResult alt = expand(bumped, state, order + 1);
    for (int k = 0; k <= order; ++k)
        if (base.energies.at(k) != alt.energies.at(k)) return false;
    return true;
}

}  // namespace scoul
