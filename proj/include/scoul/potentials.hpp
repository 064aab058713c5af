#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scoul/potential_series.hpp"
#include "scoul/rational.hpp"

namespace scoul {

enum class PotentialKind { coulomb, yukawa, hulthen, exp_cosine, custom };

inline std::string kind_name(PotentialKind k) {
    switch (k) {
        case PotentialKind::coulomb:    return "coulomb";
        case PotentialKind::yukawa:     return "yukawa";
        case PotentialKind::hulthen:    return "hulthen";
        case PotentialKind::exp_cosine: return "exp-cosine";
        case PotentialKind::custom:     return "custom";
    }
    throw std::logic_error("unreachable");
}

inline PotentialKind kind_from_name(const std::string& s) {
    if (s == "coulomb") return PotentialKind::coulomb;
    if (s == "yukawa" || s == "debye-huckel") return PotentialKind::yukawa;
    if (s == "hulthen") return PotentialKind::hulthen;
    if (s == "exp-cosine") return PotentialKind::exp_cosine;
    if (s == "custom") return PotentialKind::custom;
    throw std::invalid_argument("unknown potential kind: '" + s + "'");
}

// Named screening families:
//   coulomb:    V(r) = -g/r
//   yukawa:     V(r) = -g e^{-lr}/r            (Debye-Hueckel is an alias)
//   hulthen:    V(r) = -g*l*e^{-lr}/(1 - e^{-lr})
//   exp-cosine: V(r) = -g e^{-lr} cos(lr)/r
//   custom:     explicit coefficient list, no closed form
struct ScreenedPotentialSpec {
    PotentialKind kind = PotentialKind::coulomb;
    Rational g = 1;
    Rational lambda = 0;
    std::optional<std::vector<Rational>> custom_coeffs;

    void validate() const {
        if (kind == PotentialKind::custom) {
            if (!custom_coeffs || custom_coeffs->empty())
                throw std::invalid_argument("custom potential needs explicit coefficients");
            return;
        }
        if (g <= 0) throw std::invalid_argument("coupling g must be positive");
        if (lambda < 0) throw std::invalid_argument("screening lambda must be non-negative");
    }
};

// B_0 ... B_count via the triangular recurrence
// sum_{j=0}^{k} binom(k+1, j) B_j = 0, convention B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(int count) {
    if (count < 0) throw std::invalid_argument("negative Bernoulli count");
    std::vector<Rational> b(static_cast<std::size_t>(count) + 1);
    b[0] = 1;
    for (int k = 1; k <= count; ++k) {
        Rational acc = 0;
        Integer binom = 1;  // binom(k+1, j), updated incrementally
        for (int j = 0; j < k; ++j) {
            acc += Rational(binom) * b[static_cast<std::size_t>(j)];
            binom = binom * (k + 1 - j) / (j + 1);
        }
        // binom now holds binom(k+1, k) = k+1
        b[static_cast<std::size_t>(k)] = -acc / Rational(binom);
    }
    return b;
}

inline constexpr int kDefaultCoefficientCap = 64;

// Exact Taylor coefficients V_0..V_I of the chosen screening family.
inline PotentialSeries taylor_coefficients(const ScreenedPotentialSpec& spec, int count,
                                           const Rational& mass = 1,
                                           int cap = kDefaultCoefficientCap) {
    spec.validate();
    if (count < 1) throw std::invalid_argument("coefficient count must be >= 1");
    if (count > cap) throw std::invalid_argument("coefficient count exceeds cap");
    std::vector<Rational> v(static_cast<std::size_t>(count) + 1);
    switch (spec.kind) {
        case PotentialKind::coulomb:
            v[0] = -spec.g;
            break;
        case PotentialKind::yukawa: {
            // V_i = -g (-lambda)^i / i!
            Rational term = -spec.g;
            v[0] = term;
            for (int i = 1; i <= count; ++i) {
                term *= -spec.lambda;
                term /= i;
                v[static_cast<std::size_t>(i)] = term;
            }
            break;
        }
        case PotentialKind::hulthen: {
            // -g*l/(e^{lr}-1) = -(g/r) * x/(e^x - 1) with x = l*r,
            // so V_i = -g B_i lambda^i / i!.
            auto b = bernoulli_numbers(count);
            Rational pow_over_fact = 1;  // lambda^i / i!
            for (int i = 0; i <= count; ++i) {
                if (i > 0) {
                    pow_over_fact *= spec.lambda;
                    pow_over_fact /= i;
                }
                v[static_cast<std::size_t>(i)] = -spec.g * b[static_cast<std::size_t>(i)] * pow_over_fact;
            }
            break;
        }
        case PotentialKind::exp_cosine: {
            // V_i = -g Re[(-lambda(1+i_unit))^i] / i!, exact over Gaussian rationals.
            Rational re = 1, im = 0;  // z^i, z = -lambda - i*lambda
            Rational fact = 1;
            v[0] = -spec.g;
            for (int i = 1; i <= count; ++i) {
                Rational re2 = spec.lambda * (im - re);
                Rational im2 = -spec.lambda * (re + im);
                re = re2;
                im = im2;
                fact *= i;
                v[static_cast<std::size_t>(i)] = -spec.g * re / fact;
            }
            break;
        }
        case PotentialKind::custom: {
            const auto& c = *spec.custom_coeffs;
            if (static_cast<int>(c.size()) < count + 1)
                throw std::invalid_argument("custom potential supplies too few coefficients");
            for (int i = 0; i <= count; ++i) v[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
            break;
        }
    }
    return PotentialSeries(mass, std::move(v), kind_name(spec.kind));
}

inline bool has_closed_form(const ScreenedPotentialSpec& spec) {
    return spec.kind != PotentialKind::custom;
}

// Double-precision V(r) for the numerical oracle.
inline double evaluate_closed_form(const ScreenedPotentialSpec& spec, double r) {
    spec.validate();
    if (r <= 0) throw std::invalid_argument("potential evaluation needs r > 0");
    double g = to_double(spec.g);
    double lam = to_double(spec.lambda);
    switch (spec.kind) {
        case PotentialKind::coulomb:
            return -g / r;
        case PotentialKind::yukawa:
            return -g * std::exp(-lam * r) / r;
        case PotentialKind::hulthen: {
            if (lam == 0.0) return -g / r;
            // -g*lam/(e^{lam r}-1); expm1 keeps the small-argument branch exact.
            return -g * lam / std::expm1(lam * r);
        }
        case PotentialKind::exp_cosine:
            return -g * std::exp(-lam * r) * std::cos(lam * r) / r;
        case PotentialKind::custom:
            throw std::invalid_argument("custom potential has no closed form");
    }
    throw std::logic_error("unreachable");
}

}  // namespace scoul
