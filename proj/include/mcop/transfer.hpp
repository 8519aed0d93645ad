#pragma once

#include <string>
#include <vector>

#include "mcop/decomposition.hpp"
#include "mcop/lattice.hpp"

namespace mcop {

/// Transfer map from the marked order polytope to the marked chain polytope:
/// each coordinate becomes the minimum of x_p - val(q) over all q strictly
/// below p, where val is the marking on marked elements and the coordinate
/// value otherwise. Integer points map to integer points. Throws NotInDomain.
Point abs_transfer(const MarkedPoset& m, const Point& x);

/// Transfer from the marked order polytope onto the chain-order polytope of
/// (m, d): order coordinates are kept, chain coordinates are transferred
/// inside the fiber over the order part. Throws NotInDomain.
Point chain_order_transfer(const MarkedPoset& m, const Decomposition& d, const Point& x);

/// Human-readable per-coordinate min expressions of the transfer map.
std::vector<std::string> transfer_description(const MarkedPoset& m, const Decomposition& d);

/// x -> matrix * x + translation with |det(matrix)| = 1. The translation is
/// linear in the marking, so the same map works on the k-fold dilation with
/// the translation scaled by k.
struct AffineUnimodularMap {
    std::vector<std::vector<Int>> matrix;
    std::vector<Int> translation;

    static AffineUnimodularMap identity(int n);
    /// second(first(x)).
    static AffineUnimodularMap composed(const AffineUnimodularMap& second,
                                        const AffineUnimodularMap& first);

    Point apply(const Point& x, Int dilation = 1) const;
    /// Exact determinant of the linear part.
    mpz_class det() const;
};

struct MoveResult {
    AffineUnimodularMap map;
    Decomposition target;
    int element = -1;
    /// 'A': rewrite along the unique maximal chain ending in the element.
    /// 'B': reflect against the unique covering element.
    char rule = '?';
};

/// Moves a non-star element from the chain part to the order part and returns
/// the unimodular map carrying the old polytope onto the new one. When both
/// rewrite rules apply, rule A is used. Throws IsStarElement or
/// NotAdmissibleAfterMove.
MoveResult move_to_order(const MarkedPoset& m, const Decomposition& d, int p);

/// Inverse move: order part to chain part, exact inverse of move_to_order for
/// the target decomposition.
MoveResult move_to_chain(const MarkedPoset& m, const Decomposition& d, int p);

struct EquivalenceResult {
    AffineUnimodularMap map;
    std::vector<MoveResult> steps;
};

/// Composes single-element moves into a unimodular equivalence between the
/// chain-order polytopes of two decompositions with equal star signatures.
/// Elements of the symmetric difference are moved extremal-first, which keeps
/// every intermediate decomposition admissible. Throws SignatureMismatch; a
/// failing move sequence surfaces as NoPathFound.
EquivalenceResult compose_equivalence(const MarkedPoset& m, const Decomposition& d_from,
                                      const Decomposition& d_to);

/// Checks |det| = 1 and that the map carries the lattice points of the first
/// polytope exactly onto those of the second, both at dilation 1 and at
/// dilation 2.
bool verify_unimodular_equivalence(const MarkedPoset& m, const Decomposition& d1,
                                   const Decomposition& d2, const AffineUnimodularMap& map);

} // namespace mcop
