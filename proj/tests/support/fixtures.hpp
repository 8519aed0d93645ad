#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcop/decomposition.hpp"
#include "mcop/gt.hpp"
#include "mcop/poset.hpp"

namespace fixtures {

using mcop::Int;
using mcop::MarkedPoset;
using mcop::Poset;

/// b < x3 < x2 < x1 < a with markings a, b.
inline MarkedPoset linear_chain(Int top = 6, Int bottom = 0) {
    Poset p = Poset::from_relations({"b", "x3", "x2", "x1", "a"},
                                    {{"b", "x3"}, {"x3", "x2"}, {"x2", "x1"}, {"x1", "a"}});
    return MarkedPoset(std::move(p), std::map<std::string, Int>{{"a", top}, {"b", bottom}});
}

/// Nine-element branched poset; extremal elements 1, 2, 7, 8, 9 are marked
/// with a strictly order-compatible marking.
inline MarkedPoset branched9(std::map<std::string, Int> marking = {
                                 {"1", 0}, {"2", 1}, {"9", 4}, {"7", 5}, {"8", 6}}) {
    Poset p = Poset::from_relations(
        {"1", "2", "3", "4", "5", "6", "7", "8", "9"},
        {{"1", "3"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "9"}, {"4", "6"}, {"6", "7"}, {"6", "8"}});
    return MarkedPoset(std::move(p), std::move(marking));
}

inline MarkedPoset gt(int n, std::vector<Int> lambda) {
    return mcop::build_gt_poset({n, std::move(lambda)});
}

inline mcop::Decomposition d_u1(const MarkedPoset& m, const std::vector<std::string>& labels) {
    return mcop::decomposition_from_u1(m, labels);
}

inline mcop::Decomposition d_u2(const MarkedPoset& m, const std::vector<std::string>& labels) {
    return mcop::decomposition_from_u2(m, labels);
}

inline mcop::Decomposition order_decomposition(const MarkedPoset& m) { return d_u2(m, {}); }
inline mcop::Decomposition chain_decomposition(const MarkedPoset& m) { return d_u1(m, {}); }

} // namespace fixtures
