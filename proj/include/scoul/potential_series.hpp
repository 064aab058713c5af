#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "scoul/rational.hpp"

namespace scoul {

// Exact coefficients of V(r) = r^-1 * sum_i V_i r^i, together with the mass.
// The screening parameter is already folded into the V_i; coefficients are
// plain rationals, not polynomials in lambda.
struct PotentialSeries {
    Rational mass;
    std::vector<Rational> coeffs;  // V_0 ... V_I
    std::string label;

    PotentialSeries(Rational m, std::vector<Rational> v, std::string lab = {})
        : mass(std::move(m)), coeffs(std::move(v)), label(std::move(lab)) {
        if (mass <= 0) throw std::invalid_argument("mass must be positive");
        if (coeffs.empty()) throw std::invalid_argument("potential series needs at least V_0");
        if (coeffs[0] >= 0)
            throw std::invalid_argument(
                "V_0 must be negative (attractive Coulomb core required for bound states)");
    }

    int max_index() const { return static_cast<int>(coeffs.size()) - 1; }

    const Rational& v(int i) const { return coeffs.at(static_cast<std::size_t>(i)); }
};

}  // namespace scoul
