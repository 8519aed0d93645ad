#pragma once

#include <optional>
#include <vector>

#include "mcop/poset.hpp"

namespace mcop {

/// An ordered partition (U1, U2) of the unmarked elements. U1 is the order
/// part, U2 the chain part. Ids are kept sorted.
struct Decomposition {
    std::vector<int> u1;
    std::vector<int> u2;

    bool operator==(const Decomposition& other) const { return u1 == other.u1 && u2 == other.u2; }
};

/// Builds a decomposition from one side; the complement of the unmarked set
/// is inferred. Throws UnknownElement or NotAPartition (side contains a
/// marked element or a duplicate).
Decomposition decomposition_from_u1(const MarkedPoset& m, const std::vector<std::string>& u1_labels);
Decomposition decomposition_from_u2(const MarkedPoset& m, const std::vector<std::string>& u2_labels);
Decomposition decomposition_from_u1_ids(const MarkedPoset& m, std::vector<int> u1);
Decomposition decomposition_from_u2_ids(const MarkedPoset& m, std::vector<int> u2);

/// Throws NotAPartition unless (u1, u2) exactly partitions the unmarked set.
void validate_partition(const MarkedPoset& m, const Decomposition& d);

/// First pair (a, b) with a in u1, b in u2 and a strictly below b, if any.
/// Works on arbitrary disjoint subsets of the poset.
std::optional<std::pair<int, int>> admissibility_witness(const Poset& p,
                                                         const std::vector<int>& u1,
                                                         const std::vector<int>& u2);

/// True iff no u1 element lies strictly below a u2 element.
/// Throws NotAPartition when d does not partition the unmarked set.
bool is_admissible(const MarkedPoset& m, const Decomposition& d);

/// Every admissible decomposition, each exactly once, in a deterministic
/// order: u2 ranges over the order ideals of the unmarked subposet, generated
/// by lexicographic DFS along the topological coordinate order (the empty
/// ideal, i.e. the pure order decomposition, comes first).
std::vector<Decomposition> enumerate_admissible(const MarkedPoset& m);

/// A saturated chain whose interior lies in U2 and whose endpoints do not.
/// middle is ordered from the element just below top down to the element just
/// above bottom. Admissibility forces bottom into A.
struct U2Chain {
    int bottom = -1;
    int top = -1;
    std::vector<int> middle;
};

/// All saturated chains bottom -> middle.back() -> ... -> middle.front() -> top
/// with nonempty interior in u2 and endpoints in A or u1. Deterministic order.
std::vector<U2Chain> u2_chains(const MarkedPoset& m, const Decomposition& d);

/// U2 intersected with the star elements, sorted.
std::vector<int> star_signature(const MarkedPoset& m, const Decomposition& d);

/// Admissible decompositions grouped by equal star signature. Groups are
/// ordered by first occurrence in enumeration order.
std::vector<std::vector<Decomposition>> equivalence_classes(const MarkedPoset& m);

} // namespace mcop
