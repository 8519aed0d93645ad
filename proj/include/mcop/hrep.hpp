#pragma once

#include <gmpxx.h>

#include <vector>

#include "mcop/decomposition.hpp"
#include "mcop/poset.hpp"

namespace mcop {

/// Provenance of a single inequality.
enum class IneqTag { OrderCover, Chain, Nonnegativity, MarkingBound };

const char* tag_name(IneqTag tag);

/// One inequality  sum coeffs[i] * x_i <= bound  with integer coefficients.
/// Terms are (coordinate position, coefficient), sorted by position, no zero
/// coefficients.
struct LinearInequality {
    std::vector<std::pair<int, Int>> terms;
    Int bound = 0;
    IneqTag tag = IneqTag::OrderCover;

    bool same_geometry(const LinearInequality& other) const {
        return terms == other.terms && bound == other.bound;
    }
};

/// An integer H-representation over the unmarked coordinates of a marked
/// poset. Coordinates follow the fixed topological order; inequalities are
/// deduplicated and sorted by (tag, terms, bound), so equal systems are
/// byte-identical when serialized.
class HRep {
public:
    HRep(std::vector<int> coord_ids, std::vector<std::string> coord_labels,
         std::vector<LinearInequality> inequalities);

    int dimension() const { return static_cast<int>(coord_ids_.size()); }
    const std::vector<int>& coord_ids() const { return coord_ids_; }
    const std::vector<std::string>& coord_labels() const { return coord_labels_; }
    const std::vector<LinearInequality>& inequalities() const { return ineqs_; }

    /// Position of an element id in the coordinate order, -1 when absent.
    int position_of(int id) const;

    bool contains(const std::vector<Int>& x) const;
    bool contains(const std::vector<mpq_class>& x) const;

private:
    std::vector<int> coord_ids_;
    std::vector<std::string> coord_labels_;
    std::vector<LinearInequality> ineqs_;
};

/// Homogeneous cone of a decomposition: x_p >= 0 on u2, cover inequalities
/// within u1, and one chain inequality per saturated u2-run below a u1 top.
/// No marking values enter.
HRep build_cone(const MarkedPoset& m, const Decomposition& d);

/// The marked chain-order polytope of (m, d):
///   (i)   x_p <= lambda_a        for covers p -> a, p in u1, a marked
///   (ii)  lambda_b <= x_q        for covers b -> q, b marked, q in u1
///   (iii) x_p <= x_q             for covers p -> q inside u1
///   (iv)  x_p >= 0               for p in u2
///   (v)   sum over chain middle  <= val(top) - lambda(bottom)
/// where val(top) is the marking for a marked top and the coordinate x_top
/// for a top in u1. The bottom of every chain is marked; anything else is
/// rejected loudly.
HRep build_chain_order(const MarkedPoset& m, const Decomposition& d);

/// The two extremal cases (u2 empty resp. u1 empty).
HRep build_marked_order(const MarkedPoset& m);
HRep build_marked_chain(const MarkedPoset& m);

/// H-representation of the n-fold dilation, n >= 1. Every bound is a linear
/// form in the marking with no constant term, so this equals rebuilding with
/// the marking n * lambda.
HRep dilate(const HRep& h, Int n);

/// Internal form of dilate that also accepts n = 0.
HRep scale_bounds(const HRep& h, Int n);

} // namespace mcop
