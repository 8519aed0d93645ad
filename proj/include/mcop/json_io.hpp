#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "mcop/decomposition.hpp"
#include "mcop/hrep.hpp"
#include "mcop/lattice.hpp"
#include "mcop/poset.hpp"

namespace mcop {

using Json = nlohmann::ordered_json;

/// Contents of a poset file:
/// { "elements": [...], "covers": [["lo","hi"], ...],
///   "marking": {"label": value, ...},
///   "decomposition": {"U1": [...], "U2": [...]} }   (decomposition optional)
struct PosetFile {
    MarkedPoset marked_poset;
    std::optional<Decomposition> decomposition;
};

PosetFile parse_poset_json(const Json& j);

/// Reads a poset file; "-" means standard input.
PosetFile load_poset_file(const std::string& path);

Json poset_to_json(const MarkedPoset& m, const std::optional<Decomposition>& d = std::nullopt);

Json hrep_to_json(const HRep& h);

Json point_to_json(const std::vector<std::string>& labels, const Point& x);

/// Exact number: plain integer when the denominator is 1, else "p/q".
Json rational_to_json(const mpq_class& q);

} // namespace mcop
