#include "mcop/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mcop {

namespace {

std::vector<int> complement_of(const MarkedPoset& m, const std::vector<int>& side) {
    std::set<int> taken(side.begin(), side.end());
    if (taken.size() != side.size()) throw NotAPartition("duplicate element in decomposition side");
    for (int id : side)
        if (m.is_marked(id)) throw NotAPartition("marked element in decomposition: " + m.poset().label(id));
    std::vector<int> rest;
    for (int id : m.unmarked_ids())
        if (!taken.count(id)) rest.push_back(id);
    std::sort(rest.begin(), rest.end());
    return rest;
}

std::vector<int> ids_of(const MarkedPoset& m, const std::vector<std::string>& labels) {
    std::vector<int> ids;
    ids.reserve(labels.size());
    for (const auto& label : labels) ids.push_back(m.poset().index(label));
    return ids;
}

} // namespace

Decomposition decomposition_from_u1_ids(const MarkedPoset& m, std::vector<int> u1) {
    std::vector<int> u2 = complement_of(m, u1);
    std::sort(u1.begin(), u1.end());
    return {std::move(u1), std::move(u2)};
}

Decomposition decomposition_from_u2_ids(const MarkedPoset& m, std::vector<int> u2) {
    std::vector<int> u1 = complement_of(m, u2);
    std::sort(u2.begin(), u2.end());
    return {std::move(u1), std::move(u2)};
}

Decomposition decomposition_from_u1(const MarkedPoset& m, const std::vector<std::string>& u1_labels) {
    return decomposition_from_u1_ids(m, ids_of(m, u1_labels));
}

Decomposition decomposition_from_u2(const MarkedPoset& m, const std::vector<std::string>& u2_labels) {
    return decomposition_from_u2_ids(m, ids_of(m, u2_labels));
}

void validate_partition(const MarkedPoset& m, const Decomposition& d) {
    std::set<int> seen;
    for (int id : d.u1) {
        if (!seen.insert(id).second) throw NotAPartition("element appears twice: " + m.poset().label(id));
    }
    for (int id : d.u2) {
        if (!seen.insert(id).second) throw NotAPartition("element in both sides: " + m.poset().label(id));
    }
    const auto& unmarked = m.unmarked_ids();
    if (seen.size() != unmarked.size()) throw NotAPartition("decomposition does not cover the unmarked set");
    for (int id : unmarked)
        if (!seen.count(id)) throw NotAPartition("unmarked element missing: " + m.poset().label(id));
    for (int id : seen)
        if (m.is_marked(id)) throw NotAPartition("marked element in decomposition: " + m.poset().label(id));
}

std::optional<std::pair<int, int>> admissibility_witness(const Poset& p,
                                                         const std::vector<int>& u1,
                                                         const std::vector<int>& u2) {
    for (int a : u1)
        for (int b : u2)
            if (p.less(a, b)) return std::make_pair(a, b);
    return std::nullopt;
}

bool is_admissible(const MarkedPoset& m, const Decomposition& d) {
    validate_partition(m, d);
    return !admissibility_witness(m.poset(), d.u1, d.u2).has_value();
}

std::vector<Decomposition> enumerate_admissible(const MarkedPoset& m) {
    const Poset& p = m.poset();
    const auto& coords = m.unmarked_ids(); // topological order
    const int k = static_cast<int>(coords.size());

    // down[i]: positions of unmarked elements strictly below coords[i].
    std::vector<std::vector<int>> below(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < i; ++j)
            if (p.less(coords[j], coords[i])) below[i].push_back(j);

    std::vector<Decomposition> out;
    std::vector<char> in_u2(k, 0);
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == k) {
            Decomposition d;
            for (int j = 0; j < k; ++j) (in_u2[j] ? d.u2 : d.u1).push_back(coords[j]);
            std::sort(d.u1.begin(), d.u1.end());
            std::sort(d.u2.begin(), d.u2.end());
            out.push_back(std::move(d));
            return;
        }
        in_u2[i] = 0;
        self(self, i + 1);
        bool ideal = true;
        for (int j : below[i])
            if (!in_u2[j]) ideal = false;
        if (ideal) {
            in_u2[i] = 1;
            self(self, i + 1);
            in_u2[i] = 0;
        }
    };
    dfs(dfs, 0);
    return out;
}

std::vector<U2Chain> u2_chains(const MarkedPoset& m, const Decomposition& d) {
    const Poset& p = m.poset();
    std::set<int> u2(d.u2.begin(), d.u2.end());

    std::vector<U2Chain> out;
    std::vector<int> interior; // ascending while walking up
    auto climb = [&](auto&& self, int bottom, int v) -> void {
        interior.push_back(v);
        for (int w : p.covering(v)) {
            if (u2.count(w)) {
                self(self, bottom, w);
            } else {
                U2Chain chain;
                chain.bottom = bottom;
                chain.top = w;
                chain.middle.assign(interior.rbegin(), interior.rend());
                out.push_back(std::move(chain));
            }
        }
        interior.pop_back();
    };

    // Walk every cover leaving A (or U1) into U2, bottom candidates in
    // topological order for a reproducible listing.
    for (int bottom : p.topo_order()) {
        if (u2.count(bottom)) continue;
        for (int z : p.covering(bottom))
            if (u2.count(z)) climb(climb, bottom, z);
    }
    return out;
}

std::vector<int> star_signature(const MarkedPoset& m, const Decomposition& d) {
    std::vector<int> stars = star_elements(m);
    std::vector<int> out;
    std::set<int> u2(d.u2.begin(), d.u2.end());
    for (int s : stars)
        if (u2.count(s)) out.push_back(s);
    return out;
}

std::vector<std::vector<Decomposition>> equivalence_classes(const MarkedPoset& m) {
    std::vector<Decomposition> all = enumerate_admissible(m);
    std::vector<std::vector<Decomposition>> classes;
    std::vector<std::vector<int>> signatures;
    for (auto& d : all) {
        std::vector<int> sig = star_signature(m, d);
        bool placed = false;
        for (size_t i = 0; i < classes.size(); ++i) {
            if (signatures[i] == sig) {
                classes[i].push_back(d);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({d});
            signatures.push_back(std::move(sig));
        }
    }
    return classes;
}

} // namespace mcop
