#pragma once

#include <stdexcept>
#include <vector>

#include "scoul/rational.hpp"

namespace scoul {

// Laurent coefficients of the log-derivative orders:
//   C_0(r) = C[0][0]          (a constant, the decaying-tail slope)
//   C_k(r) = r^-k sum_i C[k][i] r^i,  k >= 1.
// Stored as a uniform (K+1) x (K+1) grid.
class LaurentTable {
  public:
    explicit LaurentTable(int order)
        : order_(order),
          grid_(static_cast<std::size_t>(order + 1),
                std::vector<Rational>(static_cast<std::size_t>(order + 1))) {
        if (order < 0) throw std::invalid_argument("negative Laurent table order");
    }

    int order() const { return order_; }

    Rational& at(int k, int i) {
        return grid_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i));
    }
    const Rational& at(int k, int i) const {
        return grid_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(i));
    }

    // In-cone access with implicit zeros for the degenerate row 0.
    Rational coeff(int k, int i) const {
        if (k == 0) return i == 0 ? grid_[0][0] : Rational(0);
        return at(k, i);
    }

  private:
    int order_;
    std::vector<std::vector<Rational>> grid_;
};

}  // namespace scoul
