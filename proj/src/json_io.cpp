#include "mcop/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

namespace mcop {

PosetFile parse_poset_json(const Json& j) {
    if (!j.is_object()) throw Error("poset file must be a JSON object");
    if (!j.contains("elements") || !j["elements"].is_array()) throw Error("missing \"elements\" array");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) elements.push_back(e.get<std::string>());

    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        for (const auto& pair : j["covers"]) {
            if (!pair.is_array() || pair.size() != 2) throw Error("cover entries must be [lo, hi] pairs");
            covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
    }
    Poset poset = Poset::from_relations(elements, covers);

    std::map<std::string, Int> marking;
    if (j.contains("marking")) {
        for (const auto& [label, value] : j["marking"].items()) {
            if (!value.is_number_integer()) throw Error("marking values must be integers");
            marking[label] = value.get<Int>();
        }
    }
    MarkedPoset m(std::move(poset), marking);

    std::optional<Decomposition> d;
    if (j.contains("decomposition")) {
        const auto& dj = j["decomposition"];
        std::vector<std::string> u1;
        if (dj.contains("U1"))
            for (const auto& e : dj["U1"]) u1.push_back(e.get<std::string>());
        Decomposition parsed = decomposition_from_u1(m, u1);
        if (dj.contains("U2")) {
            std::vector<int> u2;
            for (const auto& e : dj["U2"]) u2.push_back(m.poset().index(e.get<std::string>()));
            std::sort(u2.begin(), u2.end());
            if (u2 != parsed.u2) throw NotAPartition("decomposition U1/U2 do not partition the unmarked set");
        }
        d = std::move(parsed);
    }
    return {std::move(m), std::move(d)};
}

PosetFile load_poset_file(const std::string& path) {
    Json j;
    if (path == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(path);
        if (!in) throw Error("cannot open poset file: " + path);
        in >> j;
    }
    return parse_poset_json(j);
}

Json poset_to_json(const MarkedPoset& m, const std::optional<Decomposition>& d) {
    Json j;
    j["elements"] = Json::array();
    for (const auto& label : m.poset().labels()) j["elements"].push_back(label);
    j["covers"] = Json::array();
    for (const auto& [lo, hi] : m.poset().cover_labels()) j["covers"].push_back(Json::array({lo, hi}));
    Json marking = Json::object();
    for (const auto& [label, value] : m.marking_labels()) marking[label] = value;
    j["marking"] = std::move(marking);
    if (d) {
        Json dj;
        dj["U1"] = Json::array();
        for (int id : d->u1) dj["U1"].push_back(m.poset().label(id));
        dj["U2"] = Json::array();
        for (int id : d->u2) dj["U2"].push_back(m.poset().label(id));
        j["decomposition"] = std::move(dj);
    }
    return j;
}

Json hrep_to_json(const HRep& h) {
    Json j;
    j["coordinates"] = Json::array();
    for (const auto& label : h.coord_labels()) j["coordinates"].push_back(label);
    j["inequalities"] = Json::array();
    for (const auto& ineq : h.inequalities()) {
        Json entry;
        Json coeffs = Json::object();
        for (auto [pos, c] : ineq.terms) coeffs[h.coord_labels()[pos]] = c;
        entry["coeffs"] = std::move(coeffs);
        entry["bound"] = ineq.bound;
        entry["tag"] = tag_name(ineq.tag);
        j["inequalities"].push_back(std::move(entry));
    }
    return j;
}

Json point_to_json(const std::vector<std::string>& labels, const Point& x) {
    if (labels.size() != x.size()) throw DimensionMismatch("point has wrong dimension");
    Json j = Json::object();
    for (size_t i = 0; i < labels.size(); ++i) j[labels[i]] = x[i];
    return j;
}

Json rational_to_json(const mpq_class& q) {
    if (q.get_den() == 1) {
        if (q.get_num().fits_slong_p()) return static_cast<long long>(q.get_num().get_si());
        return q.get_num().get_str();
    }
    return q.get_str();
}

} // namespace mcop
