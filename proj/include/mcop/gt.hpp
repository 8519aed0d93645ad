#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mcop/poset.hpp"

namespace mcop {

/// Size parameter and weakly decreasing nonnegative marking of length n + 1.
struct GTSpec {
    int n = 1;
    std::vector<Int> lambda;
};

void validate_gt_spec(const GTSpec& spec);

std::string gt_label(int i, int j);

/// Triangular interlacing poset on {p_{i,j} : 0 <= i <= j <= n} with covers
/// p_{i-1,j} -> p_{i,j} -> p_{i-1,j-1}; the first column carries the marking.
MarkedPoset build_gt_poset(const GTSpec& spec);

/// prod_{0 <= i < j <= n} (lambda_i - lambda_j + j - i) / (j - i), exactly.
/// Equals the lattice-point count of the marked order polytope.
mpz_class weyl_dimension(const GTSpec& spec);

/// Number of distinct star signatures among the admissible decompositions;
/// equals 2^(n-2) for n >= 2.
long long count_signature_classes(int n);

} // namespace mcop
