#include "mcop/lattice.hpp"

#include "mcop/num.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mcop {

namespace {

Int floor_div(Int a, Int b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

struct Bounds {
    std::vector<Int> lo, hi;
    std::vector<char> has_lo, has_hi;

    explicit Bounds(int n) : lo(n, 0), hi(n, 0), has_lo(n, 0), has_hi(n, 0) {}

    // Returns false when an empty interval appears.
    bool tighten_hi(int j, Int v, bool* changed) {
        if (!has_hi[j] || v < hi[j]) {
            hi[j] = v;
            has_hi[j] = 1;
            *changed = true;
        }
        return !(has_lo[j] && has_hi[j] && lo[j] > hi[j]);
    }
    bool tighten_lo(int j, Int v, bool* changed) {
        if (!has_lo[j] || v > lo[j]) {
            lo[j] = v;
            has_lo[j] = 1;
            *changed = true;
        }
        return !(has_lo[j] && has_hi[j] && lo[j] > hi[j]);
    }
};

// One propagation step over every inequality; loops to a fixpoint.
// Returns false when the system is infeasible.
bool propagate(const HRep& h, Bounds& b) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& ineq : h.inequalities()) {
            for (size_t skip = 0; skip < ineq.terms.size(); ++skip) {
                Int rest = ineq.bound;
                bool ok = true;
                for (size_t k = 0; k < ineq.terms.size() && ok; ++k) {
                    if (k == skip) continue;
                    auto [j, c] = ineq.terms[k];
                    if (c > 0) {
                        if (!b.has_lo[j]) ok = false;
                        else rest -= c * b.lo[j];
                    } else {
                        if (!b.has_hi[j]) ok = false;
                        else rest -= c * b.hi[j];
                    }
                }
                if (!ok) continue;
                auto [j, c] = ineq.terms[skip];
                if (c > 0) {
                    if (!b.tighten_hi(j, floor_div(rest, c), &changed)) return false;
                } else {
                    if (!b.tighten_lo(j, ceil_div(rest, c), &changed)) return false;
                }
            }
        }
    }
    return true;
}

template <typename Visit>
void enumerate_core(const HRep& h, Visit&& visit) {
    const int n = h.dimension();
    Bounds root(n);
    if (!propagate(h, root)) return;
    for (int j = 0; j < n; ++j)
        if (!root.has_lo[j] || !root.has_hi[j])
            throw Unbounded("no finite bound for coordinate " + h.coord_labels()[j]);

    Point x(n, 0);
    auto dfs = [&](auto&& self, const Bounds& b, int depth) -> void {
        if (depth == n) {
            // Propagation is a relaxation; recheck exactly at the leaf.
            if (h.contains(x)) visit(x);
            return;
        }
        for (Int v = b.lo[depth]; v <= b.hi[depth]; ++v) {
            Bounds next = b;
            next.lo[depth] = next.hi[depth] = v;
            x[depth] = v;
            if (propagate(h, next)) self(self, next, depth + 1);
        }
    };
    dfs(dfs, root, 0);
}

std::string point_str(const Point& x) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
    out << ")";
    return out.str();
}

} // namespace

std::optional<IntervalBox> propagate_box(const HRep& h) {
    Bounds b(h.dimension());
    if (!propagate(h, b)) return std::nullopt;
    for (int j = 0; j < h.dimension(); ++j)
        if (!b.has_lo[j] || !b.has_hi[j])
            throw Unbounded("no finite bound for coordinate " + h.coord_labels()[j]);
    return IntervalBox{b.lo, b.hi};
}

std::vector<Point> enumerate_lattice_points(const HRep& h) {
    std::vector<Point> out;
    enumerate_core(h, [&](const Point& x) { out.push_back(x); });
    return out;
}

long long count_lattice_points(const HRep& h) {
    long long n = 0;
    enumerate_core(h, [&](const Point&) { ++n; });
    return n;
}

Point restrict_point(const HRep& h, const Point& x, const std::vector<int>& ids) {
    if (static_cast<int>(x.size()) != h.dimension()) throw DimensionMismatch("point has wrong dimension");
    std::set<int> wanted(ids.begin(), ids.end());
    Point out;
    for (int i = 0; i < h.dimension(); ++i)
        if (wanted.count(h.coord_ids()[i])) out.push_back(x[i]);
    return out;
}

HRep order_part_polytope(const MarkedPoset& m, const Decomposition& d) {
    const Poset& p = m.poset();
    std::set<int> u1(d.u1.begin(), d.u1.end());

    // Induced subposet on A union u1, covers recomputed from the restriction
    // of the order.
    std::vector<int> members;
    for (int id : p.topo_order())
        if (m.is_marked(id) || u1.count(id)) members.push_back(id);
    std::vector<std::string> labels;
    for (int id : members) labels.push_back(p.label(id));
    std::vector<std::pair<std::string, std::string>> relations;
    for (int a : members)
        for (int b : members)
            if (p.less(a, b)) relations.emplace_back(p.label(a), p.label(b));
    Poset induced = Poset::from_relations(labels, relations);

    // Coordinates: u1 in the ambient coordinate order.
    std::vector<int> coord_ids;
    std::vector<std::string> coord_labels;
    std::map<std::string, int> pos;
    for (int id : m.unmarked_ids()) {
        if (!u1.count(id)) continue;
        pos[p.label(id)] = static_cast<int>(coord_ids.size());
        coord_ids.push_back(id);
        coord_labels.push_back(p.label(id));
    }

    std::vector<LinearInequality> ineqs;
    for (auto [lo, hi] : induced.covers()) {
        const std::string& lo_label = induced.label(lo);
        const std::string& hi_label = induced.label(hi);
        bool lo_marked = m.is_marked(p.index(lo_label));
        bool hi_marked = m.is_marked(p.index(hi_label));
        if (lo_marked && hi_marked) continue;
        if (lo_marked) {
            ineqs.push_back({{{pos[hi_label], -1}}, -m.marking(p.index(lo_label)), IneqTag::MarkingBound});
        } else if (hi_marked) {
            ineqs.push_back({{{pos[lo_label], 1}}, m.marking(p.index(hi_label)), IneqTag::MarkingBound});
        } else {
            ineqs.push_back({{{pos[lo_label], 1}, {pos[hi_label], -1}}, 0, IneqTag::OrderCover});
        }
    }
    return HRep(std::move(coord_ids), std::move(coord_labels), std::move(ineqs));
}

std::vector<Point> project_order_part(const MarkedPoset& m, const Decomposition& d,
                                      const std::vector<Point>& points) {
    std::set<int> u1(d.u1.begin(), d.u1.end());
    std::set<Point> out;
    const auto& coords = m.unmarked_ids();
    for (const Point& x : points) {
        if (x.size() != coords.size()) throw DimensionMismatch("point has wrong dimension");
        Point proj;
        for (size_t i = 0; i < coords.size(); ++i)
            if (u1.count(coords[i])) proj.push_back(x[i]);
        out.insert(std::move(proj));
    }
    return {out.begin(), out.end()};
}

HRep fiber_polytope(const MarkedPoset& m, const Decomposition& d, const Point& s) {
    HRep order_part = order_part_polytope(m, d);
    if (static_cast<int>(s.size()) != order_part.dimension())
        throw DimensionMismatch("order point has wrong dimension");
    if (!order_part.contains(s))
        throw InvalidOrderPoint("point " + point_str(s) + " is not in the order-part polytope");
    std::vector<Int> values(s.begin(), s.end());
    MarkedPoset extended = m.extended(order_part.coord_ids(), values);
    return build_marked_chain(extended);
}

DecompositionPropertyReport check_decomposition_property(const MarkedPoset& m, const Decomposition& d,
                                                         const std::vector<int>& fixed) {
    validate_partition(m, d);
    std::set<int> fixed_set(fixed.begin(), fixed.end());
    for (int id : fixed)
        if (m.is_marked(id)) throw NotAPartition("fixed element is marked: " + m.poset().label(id));

    HRep h = build_chain_order(m, d);
    std::vector<Point> points = enumerate_lattice_points(h);
    std::set<Point> point_set(points.begin(), points.end());

    // Fixed coordinates and free coordinates, both in ambient order.
    std::vector<int> fixed_positions, free_positions;
    for (int i = 0; i < h.dimension(); ++i)
        (fixed_set.count(h.coord_ids()[i]) ? fixed_positions : free_positions).push_back(i);

    DecompositionPropertyReport report;
    std::set<Point> reported;
    std::set<Point> fiber_done; // fixed-value vectors already processed

    for (const Point& base : points) {
        Point s;
        for (int i : fixed_positions) s.push_back(base[i]);
        if (!fiber_done.insert(s).second) continue;

        // Structural fiber: mark the fixed coordinates with the point's
        // values and rebuild the chain-order polytope of what remains.
        std::vector<int> fixed_ids;
        for (int i : fixed_positions) fixed_ids.push_back(h.coord_ids()[i]);
        MarkedPoset extended = m.extended(fixed_ids, s);
        std::vector<int> fiber_u1, fiber_u2;
        for (int id : d.u1)
            if (!fixed_set.count(id)) fiber_u1.push_back(id);
        for (int id : d.u2)
            if (!fixed_set.count(id)) fiber_u2.push_back(id);
        HRep fiber = build_chain_order(extended, Decomposition{fiber_u1, fiber_u2});
        std::vector<Point> fiber_points = enumerate_lattice_points(fiber);
        std::set<Point> fiber_set(fiber_points.begin(), fiber_points.end());

        for (const Point& q : fiber_points) {
            Point mixed(h.dimension(), 0);
            for (size_t k = 0; k < fixed_positions.size(); ++k) mixed[fixed_positions[k]] = s[k];
            for (size_t k = 0; k < free_positions.size(); ++k) mixed[free_positions[k]] = q[k];
            if (!point_set.count(mixed) && reported.insert(mixed).second)
                report.escaped.push_back({base, q, mixed});
        }
        // Coverage: every polytope point with these fixed values must appear
        // in its structural fiber.
        for (const Point& other : points) {
            bool same = true;
            for (size_t k = 0; k < fixed_positions.size(); ++k)
                if (other[fixed_positions[k]] != s[k]) same = false;
            if (!same) continue;
            Point free_part;
            for (int i : free_positions) free_part.push_back(other[i]);
            if (!fiber_set.count(free_part)) report.uncovered.push_back(other);
        }
    }
    report.holds = report.escaped.empty() && report.uncovered.empty();
    return report;
}

// ---------------------------------------------------------------------------

bool EhrhartPolynomial::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

int EhrhartPolynomial::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0) return i;
    return 0;
}

mpq_class EhrhartPolynomial::eval(Int k) const {
    mpq_class acc = 0, power = 1;
    for (const auto& c : coeffs) {
        acc += c * power;
        power *= to_mpq(k);
    }
    return acc;
}

bool EhrhartPolynomial::operator==(const EhrhartPolynomial& other) const {
    size_t n = std::max(coeffs.size(), other.coeffs.size());
    for (size_t i = 0; i < n; ++i) {
        mpq_class a = i < coeffs.size() ? coeffs[i] : mpq_class(0);
        mpq_class b = i < other.coeffs.size() ? other.coeffs[i] : mpq_class(0);
        if (a != b) return false;
    }
    return true;
}

std::string EhrhartPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) out << " + ";
        out << coeffs[i].get_str();
        if (i == 1) out << "*t";
        if (i > 1) out << "*t^" << i;
        first = false;
    }
    return out.str();
}

EhrhartPolynomial ehrhart_polynomial(const MarkedPoset& m, const Decomposition& d) {
    HRep h = build_chain_order(m, d);
    const int dim = h.dimension();
    if (count_lattice_points(h) == 0) return EhrhartPolynomial{{mpq_class(0)}};

    std::vector<long long> counts;
    for (Int k = 0; k <= dim + 1; ++k) counts.push_back(count_lattice_points(scale_bounds(h, k)));

    // Lagrange interpolation through the nodes 0..dim.
    std::vector<mpq_class> coeffs(dim + 1, mpq_class(0));
    for (Int k = 0; k <= dim; ++k) {
        // Basis polynomial prod_{j != k} (t - j) / (k - j), expanded.
        std::vector<mpq_class> basis{mpq_class(1)};
        mpq_class denom = 1;
        for (Int j = 0; j <= dim; ++j) {
            if (j == k) continue;
            std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
            for (size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= to_mpq(j) * basis[i];
            }
            basis = std::move(next);
            denom *= to_mpq(k - j);
        }
        for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += to_mpq(counts[k]) * basis[i] / denom;
    }
    EhrhartPolynomial poly{std::move(coeffs)};
    if (poly.eval(dim + 1) != to_mpq(counts[dim + 1]))
        throw Error("counting polynomial failed its consistency check at node " + std::to_string(dim + 1));
    return poly;
}

EhrhartEquivalenceReport check_ehrhart_equivalence(const MarkedPoset& m) {
    EhrhartEquivalenceReport report;
    report.decompositions = enumerate_admissible(m);
    for (const auto& d : report.decompositions) report.polynomials.push_back(ehrhart_polynomial(m, d));
    report.equivalent = true;
    for (size_t i = 1; i < report.polynomials.size(); ++i) {
        if (!(report.polynomials[i] == report.polynomials[0])) {
            report.equivalent = false;
            report.mismatch_a = 0;
            report.mismatch_b = static_cast<int>(i);
            break;
        }
    }
    if (!report.polynomials.empty()) report.polynomial = report.polynomials[0];
    return report;
}

std::vector<Point> minkowski_sum(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::set<Point> out;
    for (const Point& x : a)
        for (const Point& y : b) {
            Point z(x.size());
            for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
            out.insert(std::move(z));
        }
    return {out.begin(), out.end()};
}

std::pair<Point, Point> split_dilated_point(const MarkedPoset& m, const Decomposition& d,
                                            const Point& s, Int n) {
    if (n < 2) throw Error("split requires n >= 2");
    HRep dilated = scale_bounds(build_chain_order(m, d), n);
    if (!dilated.contains(s)) throw NotInPolytope("point " + point_str(s) + " is not in the dilated polytope");

    const Int n1 = (n + 1) / 2, n2 = n / 2;
    const auto& coords = m.unmarked_ids();
    std::set<int> u1(d.u1.begin(), d.u1.end());

    Point s1(s.size(), 0), s2(s.size(), 0);
    Point proj1, proj2; // u1 parts in coordinate order
    for (size_t i = 0; i < coords.size(); ++i) {
        if (!u1.count(coords[i])) continue;
        Int r = floor_div(s[i], n), v = s[i] - n * r;
        Int a = n1 * r + std::min(v, n1);
        Int b = n2 * r + std::max<Int>(0, v - n1);
        s1[i] = a;
        s2[i] = b;
        proj1.push_back(a);
        proj2.push_back(b);
    }

    // Chain part: prefer the proportionally balanced fiber point, fall back
    // to the lexicographically first one whose complement lands in the second
    // half's fiber.
    MarkedPoset m1 = m.scaled(n1), m2 = m.scaled(n2);
    HRep fiber1 = fiber_polytope(m1, d, proj1);
    HRep fiber2 = fiber_polytope(m2, d, proj2);
    Point t = restrict_point(dilated, s, d.u2);

    std::vector<Point> candidates;
    Point balanced(t.size());
    for (size_t i = 0; i < t.size(); ++i) balanced[i] = floor_div(t[i] * n1, n);
    candidates.push_back(std::move(balanced));
    for (Point& lex : enumerate_lattice_points(fiber1)) candidates.push_back(std::move(lex));

    bool found = false;
    for (const Point& t1 : candidates) {
        Point t2(t.size());
        for (size_t i = 0; i < t.size(); ++i) t2[i] = t[i] - t1[i];
        if (!fiber1.contains(t1) || !fiber2.contains(t2)) continue;
        int pos = 0;
        for (size_t i = 0; i < coords.size(); ++i) {
            if (u1.count(coords[i])) continue;
            s1[i] = t1[pos];
            s2[i] = t2[pos];
            ++pos;
        }
        found = true;
        break;
    }
    if (!found) throw Error("no fiber split found for " + point_str(s));

    HRep h1 = scale_bounds(build_chain_order(m, d), n1);
    HRep h2 = scale_bounds(build_chain_order(m, d), n2);
    if (!h1.contains(s1) || !h2.contains(s2)) throw Error("split produced an invalid summand");
    return {s1, s2};
}

namespace {

// Decomposes s in S(n lambda) into n summands of S(lambda) by halving.
void decompose_witness(const MarkedPoset& m, const Decomposition& d, const Point& s, Int n,
                       std::vector<Point>& out) {
    if (n == 1) {
        out.push_back(s);
        return;
    }
    auto [s1, s2] = split_dilated_point(m, d, s, n);
    decompose_witness(m, d, s1, (n + 1) / 2, out);
    decompose_witness(m, d, s2, n / 2, out);
}

} // namespace

NormalityReport verify_normality(const MarkedPoset& m, const Decomposition& d, Int n) {
    if (n < 2) throw Error("normality check requires n >= 2");
    NormalityReport report;
    report.n = n;

    HRep h = build_chain_order(m, d);
    std::vector<Point> base = enumerate_lattice_points(h);
    std::vector<Point> sum = base;
    for (Int i = 1; i < n; ++i) sum = minkowski_sum(sum, base);
    std::vector<Point> dilated = enumerate_lattice_points(scale_bounds(h, n));

    report.dilated_count = static_cast<long long>(dilated.size());
    report.sum_count = static_cast<long long>(sum.size());
    std::set<Point> sum_set(sum.begin(), sum.end());
    std::set<Point> dilated_set(dilated.begin(), dilated.end());
    for (const Point& x : dilated)
        if (!sum_set.count(x)) report.missing_from_sum.push_back(x);
    for (const Point& x : sum)
        if (!dilated_set.count(x)) report.extra_in_sum.push_back(x);
    report.holds = report.missing_from_sum.empty() && report.extra_in_sum.empty();

    if (report.holds) {
        for (const Point& s : dilated) {
            std::vector<Point> parts;
            decompose_witness(m, d, s, n, parts);
            Point total(s.size(), 0);
            for (const Point& part : parts)
                for (size_t i = 0; i < s.size(); ++i) total[i] += part[i];
            if (total != s || static_cast<Int>(parts.size()) != n)
                throw Error("witness decomposition failed for " + point_str(s));
            report.witnesses.emplace_back(s, std::move(parts));
        }
    }
    return report;
}

MinkowskiReport verify_minkowski(const MarkedPoset& m_lambda, const MarkedPoset& m_mu,
                                 const Decomposition& d) {
    if (!(m_lambda.poset() == m_mu.poset()) || m_lambda.marked_ids() != m_mu.marked_ids())
        throw DimensionMismatch("markings live on different marked posets");

    MinkowskiReport report;
    report.marked_set_linear = m_lambda.marked_linearly_ordered();

    std::map<int, Int> total;
    for (int id : m_lambda.marked_ids()) total[id] = m_lambda.marking(id) + m_mu.marking(id);
    MarkedPoset m_total = m_lambda.with_marking(total);

    std::vector<Point> a = enumerate_lattice_points(build_chain_order(m_lambda, d));
    std::vector<Point> b = enumerate_lattice_points(build_chain_order(m_mu, d));
    std::vector<Point> lhs = minkowski_sum(a, b);
    std::vector<Point> rhs = enumerate_lattice_points(build_chain_order(m_total, d));

    report.lhs_count = static_cast<long long>(lhs.size());
    report.rhs_count = static_cast<long long>(rhs.size());
    std::set<Point> lhs_set(lhs.begin(), lhs.end()), rhs_set(rhs.begin(), rhs.end());
    for (const Point& x : rhs)
        if (!lhs_set.count(x)) report.missing.push_back(x);
    for (const Point& x : lhs)
        if (!rhs_set.count(x)) report.extra.push_back(x);
    report.holds = report.missing.empty() && report.extra.empty();
    return report;
}

} // namespace mcop
