#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scoul/energy_series.hpp"
#include "scoul/rational.hpp"

namespace scoul {

struct SingularPadeSystem : std::runtime_error {
    SingularPadeSystem() : std::runtime_error("singular Pade system") {}
};

// S_K = sum_{k<=K} E_k for every K up to the series order.
inline std::vector<Rational> partial_sums(const EnergySeries& series) {
    std::vector<Rational> out;
    out.reserve(series.values.size());
    Rational acc = 0;
    for (const Rational& e : series.values) {
        acc += e;
        out.push_back(acc);
    }
    return out;
}

// [L/M] rational approximant of the series viewed as a power series in an
// auxiliary variable; the resummed energy is its value at 1.
class PadeApproximant {
  public:
    PadeApproximant(int L, int M, std::vector<Rational> num, std::vector<Rational> den,
                    int source_order)
        : L_(L), M_(M), num_(std::move(num)), den_(std::move(den)), source_order_(source_order) {}

    int numerator_degree() const { return L_; }
    int denominator_degree() const { return M_; }
    int source_order() const { return source_order_; }
    const std::vector<Rational>& numerator() const { return num_; }
    const std::vector<Rational>& denominator() const { return den_; }

    Rational evaluate(const Rational& x) const {
        Rational n = 0, d = 0;
        for (int i = static_cast<int>(num_.size()) - 1; i >= 0; --i)
            n = n * x + num_[static_cast<std::size_t>(i)];
        for (int i = static_cast<int>(den_.size()) - 1; i >= 0; --i)
            d = d * x + den_[static_cast<std::size_t>(i)];
        if (d == 0) throw std::domain_error("Pade denominator vanishes at evaluation point");
        return n / d;
    }

    Rational resummed() const { return evaluate(1); }

    // Taylor coefficients of num/den through the given order; by construction
    // the first L+M+1 must reproduce the input series exactly.
    std::vector<Rational> taylor(int order) const {
        std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) {
            Rational acc = (k < static_cast<int>(num_.size())) ? num_[static_cast<std::size_t>(k)]
                                                               : Rational(0);
            for (int j = 1; j <= std::min(k, static_cast<int>(den_.size()) - 1); ++j)
                acc -= den_[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
            c[static_cast<std::size_t>(k)] = acc;  // den_[0] == 1
        }
        return c;
    }

  private:
    int L_, M_;
    std::vector<Rational> num_, den_;
    int source_order_;
};

namespace detail {

// Exact Gaussian elimination; throws SingularPadeSystem on rank deficiency.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw SingularPadeSystem();
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot)]);
        std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(pivot)]);
        for (int row = col + 1; row < n; ++row) {
            Rational f = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                         a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(row)] -= f * b[static_cast<std::size_t>(col)];
        }
    }
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int row = n - 1; row >= 0; --row) {
        Rational acc = b[static_cast<std::size_t>(row)];
        for (int j = row + 1; j < n; ++j)
            acc -= a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] *
                   x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(row)] = acc / a[static_cast<std::size_t>(row)][static_cast<std::size_t>(row)];
    }
    return x;
}

}  // namespace detail

inline PadeApproximant pade(const EnergySeries& series, int L, int M) {
    if (L < 0 || M < 0) throw std::invalid_argument("Pade degrees must be non-negative");
    if (L + M > series.order())
        throw std::invalid_argument("Pade degrees exceed available series order");
    auto c = [&series](int i) -> Rational {
        return i < 0 ? Rational(0) : series.at(i);
    };
    // Denominator: sum_{j=0}^{M} b_j c_{L+k-j} = 0 for k = 1..M, b_0 = 1.
    std::vector<Rational> den(static_cast<std::size_t>(M) + 1);
    den[0] = 1;
    if (M > 0) {
        std::vector<std::vector<Rational>> a(static_cast<std::size_t>(M),
                                             std::vector<Rational>(static_cast<std::size_t>(M)));
        std::vector<Rational> rhs(static_cast<std::size_t>(M));
        for (int k = 1; k <= M; ++k) {
            for (int j = 1; j <= M; ++j)
                a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = c(L + k - j);
            rhs[static_cast<std::size_t>(k - 1)] = -c(L + k);
        }
        auto b = detail::solve_linear(std::move(a), std::move(rhs));
        for (int j = 1; j <= M; ++j) den[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j - 1)];
    }
    std::vector<Rational> numr(static_cast<std::size_t>(L) + 1);
    for (int i = 0; i <= L; ++i) {
        Rational acc = 0;
        for (int j = 0; j <= std::min(i, M); ++j) acc += den[static_cast<std::size_t>(j)] * c(i - j);
        numr[static_cast<std::size_t>(i)] = acc;
    }
    return PadeApproximant(L, M, std::move(numr), std::move(den), series.order());
}

struct DiagnosticsReport {
    // |E_{k+1}/E_k| keyed by k; entries missing where either term is zero.
    std::vector<std::optional<Rational>> ratios;
    std::vector<int> skipped_zero_indices;  // k with E_k == 0
    int smallest_term_index = 0;            // optimal-truncation heuristic, over k >= 1
    bool divergence_flag = false;           // ratios grew for 3 consecutive steps
};

inline DiagnosticsReport diagnostics(const EnergySeries& series) {
    if (series.order() < 3)
        throw std::invalid_argument("diagnostics needs a series of order >= 3");
    DiagnosticsReport rep;
    const int K = series.order();
    for (int k = 0; k <= K; ++k)
        if (series.at(k) == 0) rep.skipped_zero_indices.push_back(k);
    rep.ratios.resize(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) {
        if (series.at(k) != 0 && series.at(k + 1) != 0)
            rep.ratios[static_cast<std::size_t>(k)] = abs(series.at(k + 1) / series.at(k));
    }
    // smallest nonzero |E_k| for k >= 1; falls back to 0 when all corrections vanish
    std::optional<Rational> best;
    for (int k = 1; k <= K; ++k) {
        if (series.at(k) == 0) continue;
        Rational a = abs(series.at(k));
        if (!best || a < *best) {
            best = a;
            rep.smallest_term_index = k;
        }
    }
    // three consecutive strict increases among successively defined ratios
    int run = 0;
    std::optional<Rational> prev;
    for (const auto& r : rep.ratios) {
        if (!r) continue;
        if (prev && *r > *prev) {
            if (++run >= 3) rep.divergence_flag = true;
        } else if (prev) {
            run = 0;
        }
        prev = r;
    }
    return rep;
}

}  // namespace scoul
