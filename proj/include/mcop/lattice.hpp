#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "mcop/hrep.hpp"

namespace mcop {

/// An integer point aligned with the coordinate order of the HRep (equally,
/// with MarkedPoset::unmarked_ids()).
using Point = std::vector<Int>;

/// Per-coordinate integer bounds obtained by interval propagation.
struct IntervalBox {
    std::vector<Int> lo, hi;
};

/// Propagates interval bounds to a fixpoint. Returns nullopt when the system
/// is detected infeasible; throws Unbounded when some coordinate has no
/// finite bound (cannot happen for well-formed chain-order systems).
std::optional<IntervalBox> propagate_box(const HRep& h);

/// All lattice points of the polytope, in lexicographic coordinate order.
/// DFS over the coordinate order with interval propagation at every level;
/// agrees with filtering the full bounding box (tested).
std::vector<Point> enumerate_lattice_points(const HRep& h);

/// Number of lattice points without materializing them.
long long count_lattice_points(const HRep& h);

/// Restriction of a point to the positions of the given element ids
/// (ids must appear in h's coordinate order; output keeps that order).
Point restrict_point(const HRep& h, const Point& x, const std::vector<int>& ids);

/// The order-part polytope: the marked order polytope of the subposet induced
/// on A union u1, with coordinates u1 in the ambient coordinate order.
HRep order_part_polytope(const MarkedPoset& m, const Decomposition& d);

/// Image of a point set under the projection onto the u1 coordinates,
/// deduplicated and sorted.
std::vector<Point> project_order_part(const MarkedPoset& m, const Decomposition& d,
                                      const std::vector<Point>& points);

/// Marked chain polytope of (P, A union u1, marking extended by s on u1);
/// coordinates are u2. Throws InvalidOrderPoint when s is not a point of the
/// order-part polytope.
HRep fiber_polytope(const MarkedPoset& m, const Decomposition& d, const Point& s);

struct DecompositionPropertyViolation {
    Point base;        // lattice point of the polytope the fiber was built from
    Point fiber_point; // lattice point of the structural fiber
    Point mixed;       // glued point that escapes (or the uncovered base point)
};

struct DecompositionPropertyReport {
    bool holds = false;
    /// Glued points outside the polytope (first witness per mixed point, base
    /// points visited in lexicographic order).
    std::vector<DecompositionPropertyViolation> escaped;
    /// Points of the polytope not reproduced by their own fiber.
    std::vector<Point> uncovered;
};

/// Checks whether the chain-order polytope of (m, d) is the disjoint union of
/// its structural fibers over the coordinates in `fixed`: for every lattice
/// point, marking `fixed` with the point's values and rebuilding the
/// chain-order polytope of the remaining coordinates must reproduce exactly
/// the lattice points sharing those values. `fixed` need not respect
/// admissibility; that is the interesting failure case.
DecompositionPropertyReport check_decomposition_property(const MarkedPoset& m, const Decomposition& d,
                                                         const std::vector<int>& fixed);

/// Exact polynomial with rational coefficients, constant term first.
struct EhrhartPolynomial {
    std::vector<mpq_class> coeffs;

    bool is_zero() const;
    int degree() const;
    mpq_class eval(Int k) const;
    bool operator==(const EhrhartPolynomial& other) const;
    std::string to_string() const;
};

/// Counting polynomial of the chain-order polytope: interpolated through the
/// exact lattice-point counts of the dilations 0..dim and cross-checked at
/// dim + 1. The empty polytope yields the zero polynomial.
EhrhartPolynomial ehrhart_polynomial(const MarkedPoset& m, const Decomposition& d);

struct EhrhartEquivalenceReport {
    bool equivalent = false;
    EhrhartPolynomial polynomial; // common one when equivalent, else first
    std::vector<Decomposition> decompositions;
    std::vector<EhrhartPolynomial> polynomials;
    int mismatch_a = -1, mismatch_b = -1;
};

/// Computes the counting polynomial of every admissible decomposition and
/// compares them coefficient by coefficient.
EhrhartEquivalenceReport check_ehrhart_equivalence(const MarkedPoset& m);

struct NormalityReport {
    bool holds = false;
    Int n = 0;
    long long dilated_count = 0;
    long long sum_count = 0;
    std::vector<Point> missing_from_sum; // in S(N lambda) but not in the sum
    std::vector<Point> extra_in_sum;     // in the sum but not in S(N lambda)
    /// One decomposition into n summands per dilated point (on success).
    std::vector<std::pair<Point, std::vector<Point>>> witnesses;
};

/// Checks S(n lambda) == n-fold Minkowski sum of S(lambda) exactly, and on
/// success decomposes every dilated point into n summands by repeated
/// halving.
NormalityReport verify_normality(const MarkedPoset& m, const Decomposition& d, Int n);

/// Splits s in S(n lambda) into s1 + s2 with s1 in S(ceil(n/2) lambda) and
/// s2 in S(floor(n/2) lambda). Order coordinates follow the rounding split of
/// the digit expansion s_x = n r + v; chain coordinates follow a greedy fiber
/// decomposition (lexicographically first valid summand).
std::pair<Point, Point> split_dilated_point(const MarkedPoset& m, const Decomposition& d,
                                            const Point& s, Int n);

struct MinkowskiReport {
    bool holds = false;
    /// Hypothesis of the statement: the marked set is linearly ordered. When
    /// false, the check still runs and the result is informational.
    bool marked_set_linear = false;
    long long lhs_count = 0; // |S(lambda) + S(mu)|
    long long rhs_count = 0; // |S(lambda + mu)|
    std::vector<Point> missing, extra;
};

/// Checks S(lambda) + S(mu) == S(lambda + mu) for two markings of the same
/// marked poset shape.
MinkowskiReport verify_minkowski(const MarkedPoset& m_lambda, const MarkedPoset& m_mu,
                                 const Decomposition& d);

/// Elementwise Minkowski sum of two point sets, deduplicated and sorted.
std::vector<Point> minkowski_sum(const std::vector<Point>& a, const std::vector<Point>& b);

} // namespace mcop
