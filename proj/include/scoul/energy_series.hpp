#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "scoul/quantum_state.hpp"
#include "scoul/rational.hpp"

namespace scoul {

// Exact corrections E_0..E_K; the physical energy at the screening strength
// baked into the potential coefficients is sum_k E_k.
struct EnergySeries {
    std::vector<Rational> values;  // E_0 ... E_K
    int n = 0;
    int l = 0;
    std::string potential_label;

    int order() const { return static_cast<int>(values.size()) - 1; }

    const Rational& at(int k) const { return values.at(static_cast<std::size_t>(k)); }

    Rational sum(int up_to) const {
        if (up_to < 0 || up_to > order()) throw std::out_of_range("partial-sum order out of range");
        Rational s = 0;
        for (int k = 0; k <= up_to; ++k) s += values[static_cast<std::size_t>(k)];
        return s;
    }
};

}  // namespace scoul
