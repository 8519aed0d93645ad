#pragma once

#include <gmpxx.h>

#include <vector>

#include "mcop/decomposition.hpp"
#include "mcop/hrep.hpp"

namespace mcop {

/// All vertices of a bounded polyhedron, with per-vertex tight inequality
/// indices and the affine dimension of the vertex set.
struct VertexSet {
    bool empty = true;
    int dim = -1;
    std::vector<std::vector<mpq_class>> vertices;
    std::vector<std::vector<int>> tight; // indices into HRep::inequalities()

    bool all_integral() const;
};

/// Exact brute force over coordinate-count-sized subsets of inequalities:
/// each basic solution that satisfies the whole system is a vertex, and every
/// vertex arises this way. Throws Unbounded; an empty polytope is a regular
/// result, not an error.
VertexSet enumerate_vertices(const HRep& h);

/// Distinct facets as vertex index sets: inequalities whose tight vertex set
/// has affine dimension dim - 1, deduplicated geometrically.
std::vector<std::vector<int>> geometric_facets(const HRep& h, const VertexSet& vs);

/// Closed-form facet count for a regular marked poset: covers inside
/// A union u1, plus |u2|, plus the number of saturated chains through u2
/// between elements of A union u1. Throws RegularityRequired.
Int facet_count_formula(const MarkedPoset& m, const Decomposition& d);

/// For decompositions whose chain-side star sets differ exactly by q, the
/// facet count difference equals (covering(q) - 1) * (chains ending in q - 1);
/// computes the product and asserts it against the closed-form counts.
/// Throws PreconditionViolated.
Int facet_difference(const MarkedPoset& m, const Decomposition& d_u, const Decomposition& d_v, int q);

/// Face counts by dimension, f[0] vertices up to f[dim] = 1 (the polytope
/// itself). Alternating sum equals 1.
struct FVector {
    std::vector<long long> f;

    bool operator==(const FVector& other) const { return f == other.f; }
};

FVector f_vector(const HRep& h);
FVector f_vector_of(const HRep& h, const VertexSet& vs);

struct ConjecturePair {
    Decomposition coarse; // larger order part (V1)
    Decomposition fine;   // smaller order part (U1)
    FVector f_coarse, f_fine;
    /// Dimensions i where f_i(coarse) > f_i(fine) (would-be counterexamples).
    std::vector<int> violations;
};

struct ConjectureReport {
    std::vector<Decomposition> decompositions;
    std::vector<FVector> f_vectors;
    std::vector<ConjecturePair> pairs;
    /// Violations at the facet dimension; expected empty (this part is a
    /// theorem, the remaining dimensions stay an open question).
    int facet_violations = 0;
    int total_violations = 0;
};

/// Compares f-vectors componentwise over every pair of admissible
/// decompositions ordered by strict inclusion of the order parts. Findings
/// are reported, never asserted.
ConjectureReport test_f_conjecture(const MarkedPoset& m);

} // namespace mcop
