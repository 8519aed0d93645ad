#include "mcop/hrep.hpp"

#include "mcop/num.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace mcop {

const char* tag_name(IneqTag tag) {
    switch (tag) {
        case IneqTag::OrderCover: return "order-cover";
        case IneqTag::Chain: return "chain";
        case IneqTag::Nonnegativity: return "nonnegativity";
        case IneqTag::MarkingBound: return "marking-bound";
    }
    return "?";
}

HRep::HRep(std::vector<int> coord_ids, std::vector<std::string> coord_labels,
           std::vector<LinearInequality> inequalities)
    : coord_ids_(std::move(coord_ids)), coord_labels_(std::move(coord_labels)) {
    for (auto& ineq : inequalities) {
        std::sort(ineq.terms.begin(), ineq.terms.end());
        ineq.terms.erase(std::remove_if(ineq.terms.begin(), ineq.terms.end(),
                                        [](const auto& t) { return t.second == 0; }),
                         ineq.terms.end());
    }
    auto key = [](const LinearInequality& q) { return std::make_tuple(static_cast<int>(q.tag), q.terms, q.bound); };
    std::sort(inequalities.begin(), inequalities.end(),
              [&](const LinearInequality& a, const LinearInequality& b) { return key(a) < key(b); });
    for (auto& ineq : inequalities) {
        bool duplicate = false;
        for (const auto& kept : ineqs_)
            if (kept.same_geometry(ineq)) duplicate = true;
        if (!duplicate) ineqs_.push_back(std::move(ineq));
    }
}

int HRep::position_of(int id) const {
    for (size_t i = 0; i < coord_ids_.size(); ++i)
        if (coord_ids_[i] == id) return static_cast<int>(i);
    return -1;
}

bool HRep::contains(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != dimension()) throw DimensionMismatch("point has wrong dimension");
    for (const auto& ineq : ineqs_) {
        Int lhs = 0;
        for (auto [pos, c] : ineq.terms) lhs += c * x[pos];
        if (lhs > ineq.bound) return false;
    }
    return true;
}

bool HRep::contains(const std::vector<mpq_class>& x) const {
    if (static_cast<int>(x.size()) != dimension()) throw DimensionMismatch("point has wrong dimension");
    for (const auto& ineq : ineqs_) {
        mpq_class lhs = 0;
        for (auto [pos, c] : ineq.terms) lhs += to_mpq(c) * x[pos];
        if (lhs > to_mpq(ineq.bound)) return false;
    }
    return true;
}

namespace {

struct Builder {
    const MarkedPoset& m;
    std::vector<int> coords;
    std::vector<std::string> labels;
    std::map<int, int> pos;
    std::vector<LinearInequality> ineqs;

    explicit Builder(const MarkedPoset& mp) : m(mp) {
        for (int id : m.unmarked_ids()) {
            pos[id] = static_cast<int>(coords.size());
            coords.push_back(id);
            labels.push_back(m.poset().label(id));
        }
    }

    void add(LinearInequality ineq) { ineqs.push_back(std::move(ineq)); }

    HRep finish() { return HRep(std::move(coords), std::move(labels), std::move(ineqs)); }
};

} // namespace

HRep build_cone(const MarkedPoset& m, const Decomposition& d) {
    validate_partition(m, d);
    Builder b(m);
    std::set<int> u1(d.u1.begin(), d.u1.end());

    for (int p : d.u2) b.add({{{b.pos[p], -1}}, 0, IneqTag::Nonnegativity});
    for (auto [lo, hi] : m.poset().covers())
        if (u1.count(lo) && u1.count(hi))
            b.add({{{b.pos[lo], 1}, {b.pos[hi], -1}}, 0, IneqTag::OrderCover});
    for (const U2Chain& chain : u2_chains(m, d)) {
        if (!u1.count(chain.top)) continue; // homogeneous: marked tops carry no data
        LinearInequality ineq;
        for (int q : chain.middle) ineq.terms.emplace_back(b.pos[q], 1);
        ineq.terms.emplace_back(b.pos[chain.top], -1);
        ineq.bound = 0;
        ineq.tag = IneqTag::Chain;
        b.add(std::move(ineq));
    }
    return b.finish();
}

HRep build_chain_order(const MarkedPoset& m, const Decomposition& d) {
    validate_partition(m, d);
    if (m.poset().size() > 0 && m.marked_ids().empty()) throw EmptyMarking("marked set is empty");
    Builder b(m);
    std::set<int> u1(d.u1.begin(), d.u1.end());

    for (auto [lo, hi] : m.poset().covers()) {
        bool lo_u1 = u1.count(lo) != 0, hi_u1 = u1.count(hi) != 0;
        if (lo_u1 && m.is_marked(hi)) // (i)
            b.add({{{b.pos[lo], 1}}, m.marking(hi), IneqTag::MarkingBound});
        if (m.is_marked(lo) && hi_u1) // (ii)
            b.add({{{b.pos[hi], -1}}, -m.marking(lo), IneqTag::MarkingBound});
        if (lo_u1 && hi_u1) // (iii)
            b.add({{{b.pos[lo], 1}, {b.pos[hi], -1}}, 0, IneqTag::OrderCover});
    }
    for (int p : d.u2) // (iv)
        b.add({{{b.pos[p], -1}}, 0, IneqTag::Nonnegativity});
    for (const U2Chain& chain : u2_chains(m, d)) { // (v)
        if (!m.is_marked(chain.bottom))
            throw Error("chain bottom is not marked: " + m.poset().label(chain.bottom) +
                        " (decomposition is not admissible)");
        LinearInequality ineq;
        for (int q : chain.middle) ineq.terms.emplace_back(b.pos[q], 1);
        ineq.bound = -m.marking(chain.bottom);
        if (m.is_marked(chain.top)) {
            ineq.bound += m.marking(chain.top);
        } else {
            ineq.terms.emplace_back(b.pos[chain.top], -1);
        }
        ineq.tag = IneqTag::Chain;
        b.add(std::move(ineq));
    }
    return b.finish();
}

HRep build_marked_order(const MarkedPoset& m) {
    return build_chain_order(m, decomposition_from_u2_ids(m, {}));
}

HRep build_marked_chain(const MarkedPoset& m) {
    return build_chain_order(m, decomposition_from_u1_ids(m, {}));
}

HRep scale_bounds(const HRep& h, Int n) {
    if (n < 0) throw Error("dilation factor must be nonnegative");
    std::vector<LinearInequality> scaled = h.inequalities();
    for (auto& ineq : scaled) ineq.bound *= n;
    return HRep(h.coord_ids(), h.coord_labels(), std::move(scaled));
}

HRep dilate(const HRep& h, Int n) {
    if (n < 1) throw Error("dilation factor must be positive");
    return scale_bounds(h, n);
}

} // namespace mcop
