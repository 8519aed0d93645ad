#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcop/errors.hpp"

namespace mcop {

using Int = long long;

/// A finite poset stored by its Hasse diagram (cover relations).
///
/// Elements are identified by small integer ids in input order; every id has
/// a unique non-empty label. Construction normalizes an arbitrary relation to
/// its transitive reduction and rejects cyclic input.
class Poset {
public:
    /// Builds a poset from an element list and any finite order relation.
    /// Each pair (lo, hi) means lo comes strictly below hi. The stored cover
    /// set is the transitive reduction of the transitive closure.
    /// Throws CycleError (naming one cycle) or UnknownElement.
    static Poset from_relations(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& relations);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int id) const { return labels_.at(id); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Id of a label; throws UnknownElement.
    int index(const std::string& label) const;
    bool has(const std::string& label) const { return index_.count(label) != 0; }

    /// Cover pairs (lo, hi), lo below hi, sorted by (lo, hi).
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    std::vector<std::pair<std::string, std::string>> cover_labels() const;

    /// p <= q in the partial order (reflexive).
    bool leq(int p, int q) const;
    bool less(int p, int q) const { return p != q && leq(p, q); }

    /// Elements covering p (directly above).
    const std::vector<int>& covering(int p) const;
    /// Elements covered by p (directly below).
    const std::vector<int>& covered(int p) const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// A fixed topological order (ids, minimal elements first). Deterministic:
    /// ties broken by input position.
    const std::vector<int>& topo_order() const { return topo_; }
    int topo_rank(int id) const { return topo_rank_.at(id); }

    /// All saturated chains from a minimal element up to p, each as a vector
    /// of ids ending in p.
    std::vector<std::vector<int>> maximal_chains_ending(int p) const;
    /// All saturated chains from p up to a maximal element, starting with p.
    std::vector<std::vector<int>> maximal_chains_starting(int p) const;

    /// Number of saturated chains from a minimal element up to each id
    /// (linear-time DP, used where only counts matter).
    std::vector<Int> chains_ending_counts() const;

    bool operator==(const Poset& other) const;

private:
    void check_id(int id) const;

    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> up_, down_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<bool>> leq_;
    std::vector<int> topo_, topo_rank_;
};

/// A poset with a marked subset A and a nonnegative integer marking on A.
/// A must contain every minimal and every maximal element.
class MarkedPoset {
public:
    MarkedPoset(Poset poset, const std::map<std::string, Int>& marking);
    MarkedPoset(Poset poset, const std::map<int, Int>& marking_by_id);

    const Poset& poset() const { return poset_; }

    bool is_marked(int id) const { return marking_[id].has_value(); }
    Int marking(int id) const;
    std::map<std::string, Int> marking_labels() const;

    /// Marked element ids, sorted.
    const std::vector<int>& marked_ids() const { return marked_; }
    /// Unmarked element ids in topological order; this is the coordinate
    /// order shared by every inequality system and point built from this
    /// marked poset.
    const std::vector<int>& unmarked_ids() const { return unmarked_; }
    int coordinate_count() const { return static_cast<int>(unmarked_.size()); }
    /// Position of an unmarked id in the coordinate order, -1 if marked.
    int coord_pos(int id) const { return coord_pos_.at(id); }

    /// Same poset, marking multiplied by k >= 0.
    MarkedPoset scaled(Int k) const;
    /// Same poset, additionally marking the given ids with the given values.
    MarkedPoset extended(const std::vector<int>& ids, const std::vector<Int>& values) const;
    /// Same poset and marked set, different values.
    MarkedPoset with_marking(const std::map<int, Int>& marking_by_id) const;

    /// True if the marked set is a chain.
    bool marked_linearly_ordered() const;

private:
    void init(const std::map<int, Int>& marking_by_id);

    Poset poset_;
    std::vector<std::optional<Int>> marking_;
    std::vector<int> marked_, unmarked_;
    std::map<int, int> coord_pos_;
};

/// Unmarked elements with at least two covering elements and at least two
/// maximal chains ending in them. Sorted by id. Independent of the marking.
std::vector<int> star_elements(const MarkedPoset& m);

struct RegularityViolation {
    int condition = 0;              // 1..4
    std::vector<int> witnesses;
    std::string note;
};

struct RegularityReport {
    bool regular = false;
    std::vector<RegularityViolation> violations;
};

/// Checks the four non-redundancy conditions:
///  (1) no cover between two marked elements,
///  (2) the marking is injective on A,
///  (3) a marked element covered by an unmarked x carries the largest
///      marking among marked elements below x,
///  (4) a marked element covering an unmarked x carries the smallest
///      marking among marked elements above x.
RegularityReport check_regular(const MarkedPoset& m);

struct RegularizeResult {
    MarkedPoset poset;
    /// old element id -> new element id (surjective; unmarked coordinates may
    /// land on a marked element, pinning them to its marking value).
    std::vector<int> element_map;
};

/// Repeatedly contracts the closed interval between two comparable marked
/// elements with equal markings until the poset is regular or no such pair
/// remains. Throws NotRegularizable when violations survive the fixpoint.
RegularizeResult regularize(const MarkedPoset& m);

} // namespace mcop
