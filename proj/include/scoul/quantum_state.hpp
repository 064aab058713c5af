#pragma once

#include <stdexcept>

namespace scoul {

// Radial (n) and orbital (l) quantum numbers. N = n + l + 1 is the total
// multiplicity of the wavefunction zero at the origin (radial nodes plus
// the r^{l+1} regularity factor); it is the residue the first-order
// log-derivative must carry.
struct QuantumState {
    int n = 0;
    int l = 0;

    QuantumState(int n_, int l_) : n(n_), l(l_) {
        if (n < 0) throw std::invalid_argument("radial quantum number n must be >= 0");
        if (l < 0) throw std::invalid_argument("orbital quantum number l must be >= 0");
    }

    int principal_multiplicity() const { return n + l + 1; }
};

}  // namespace scoul
