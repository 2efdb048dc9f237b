#pragma once

// Randomized invariant suites behind `cvgraph verify`, plus the seeded
// generators they are built from.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cvgraph/graph.hpp"
#include "cvgraph/hamiltonian.hpp"
#include "cvgraph/symplectic.hpp"

namespace cvgraph {

using Rng = std::mt19937_64;

/// Q D Q^T with Q Haar-ish orthogonal and eigenvalues in [lo, hi].
Matrix random_positive_definite(std::size_t n, Rng &rng, double lo = 0.2, double hi = 5.0);

/// Product of random shears [[I,0],[C,I]], [[I,C],[0,I]] (C symmetric) and
/// local squeezers; exactly symplectic up to rounding.
SymplecticMatrix random_symplectic(std::size_t n, Rng &rng);

/// s_i uniform in [s_lo, s_hi], omega_i uniform in [w_lo, w_hi].
ModelParams random_params(std::size_t n, Rng &rng, double s_lo = 0.5, double s_hi = 4.0, double w_lo = 0.5,
                          double w_hi = 2.0);

/// A random bipartition with both blocks non-empty (n >= 2). `contiguous`
/// cuts 0..k | k+1..n-1.
Partition random_bipartition(std::size_t n, Rng &rng, bool contiguous);

struct SuiteResult {
    std::string name;
    double max_residual;
    double threshold;
    bool passed;
};

std::vector<SuiteResult> run_invariant_suites(std::uint64_t seed = 20240611);

} // namespace cvgraph
