#include "mcop/transfer.hpp"

#include "mcop/num.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mcop {

namespace {

// val(q): marking when marked, coordinate value otherwise.
Int value_of(const MarkedPoset& m, const Point& x, int q) {
    if (m.is_marked(q)) return m.marking(q);
    return x[m.coord_pos(q)];
}

Point transfer_core(const MarkedPoset& m, const Point& x, const std::set<int>& targets) {
    const Poset& p = m.poset();
    Point y = x;
    for (int t : targets) {
        Int best = 0;
        bool first = true;
        for (int q = 0; q < p.size(); ++q) {
            if (!p.less(q, t)) continue;
            Int v = value_of(m, x, q);
            if (first || v > best) best = v;
            first = false;
        }
        if (first) throw Error("element has nothing below it: " + p.label(t));
        y[m.coord_pos(t)] = x[m.coord_pos(t)] - best;
    }
    return y;
}

void require_in_order_polytope(const MarkedPoset& m, const Point& x) {
    if (!build_marked_order(m).contains(x)) {
        std::ostringstream msg;
        msg << "point is not in the marked order polytope";
        throw NotInDomain(msg.str());
    }
}

} // namespace

Point abs_transfer(const MarkedPoset& m, const Point& x) {
    require_in_order_polytope(m, x);
    std::set<int> targets(m.unmarked_ids().begin(), m.unmarked_ids().end());
    return transfer_core(m, x, targets);
}

Point chain_order_transfer(const MarkedPoset& m, const Decomposition& d, const Point& x) {
    validate_partition(m, d);
    require_in_order_polytope(m, x);
    std::set<int> targets(d.u2.begin(), d.u2.end());
    return transfer_core(m, x, targets);
}

std::vector<std::string> transfer_description(const MarkedPoset& m, const Decomposition& d) {
    const Poset& p = m.poset();
    std::set<int> u2(d.u2.begin(), d.u2.end());
    std::vector<std::string> out;
    for (int t : m.unmarked_ids()) {
        std::ostringstream line;
        line << "x_" << p.label(t) << " -> ";
        if (!u2.count(t)) {
            line << "x_" << p.label(t);
        } else {
            line << "min{";
            bool first = true;
            for (int q = 0; q < p.size(); ++q) {
                if (!p.less(q, t)) continue;
                if (!first) line << ", ";
                line << "x_" << p.label(t) << " - ";
                if (m.is_marked(q))
                    line << m.marking(q);
                else
                    line << "x_" << p.label(q);
                first = false;
            }
            line << "}";
        }
        out.push_back(line.str());
    }
    return out;
}

// ---------------------------------------------------------------------------

AffineUnimodularMap AffineUnimodularMap::identity(int n) {
    AffineUnimodularMap map;
    map.matrix.assign(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) map.matrix[i][i] = 1;
    map.translation.assign(n, 0);
    return map;
}

AffineUnimodularMap AffineUnimodularMap::composed(const AffineUnimodularMap& second,
                                                  const AffineUnimodularMap& first) {
    const int n = static_cast<int>(first.matrix.size());
    AffineUnimodularMap out = identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int acc = 0;
            for (int k = 0; k < n; ++k) acc += second.matrix[i][k] * first.matrix[k][j];
            out.matrix[i][j] = acc;
        }
    for (int i = 0; i < n; ++i) {
        Int acc = second.translation[i];
        for (int k = 0; k < n; ++k) acc += second.matrix[i][k] * first.translation[k];
        out.translation[i] = acc;
    }
    return out;
}

Point AffineUnimodularMap::apply(const Point& x, Int dilation) const {
    const int n = static_cast<int>(matrix.size());
    if (static_cast<int>(x.size()) != n) throw DimensionMismatch("point has wrong dimension");
    Point y(n, 0);
    for (int i = 0; i < n; ++i) {
        Int acc = translation[i] * dilation;
        for (int j = 0; j < n; ++j) acc += matrix[i][j] * x[j];
        y[i] = acc;
    }
    return y;
}

mpz_class AffineUnimodularMap::det() const {
    const int n = static_cast<int>(matrix.size());
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = to_mpz(matrix[i][j]);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// ---------------------------------------------------------------------------

namespace {

void check_movable(const MarkedPoset& m, int p) {
    const Poset& poset = m.poset();
    if (m.is_marked(p)) throw Error("cannot move a marked element: " + poset.label(p));
    std::vector<Int> ending = poset.chains_ending_counts();
    if (poset.covering(p).size() >= 2 && ending[p] >= 2)
        throw IsStarElement("star element cannot be moved: " + poset.label(p));
}

} // namespace

MoveResult move_to_order(const MarkedPoset& m, const Decomposition& d, int p) {
    validate_partition(m, d);
    const Poset& poset = m.poset();
    if (!std::binary_search(d.u2.begin(), d.u2.end(), p))
        throw Error("element is not in the chain part: " + poset.label(p));
    check_movable(m, p);
    for (int q : d.u2)
        if (poset.less(p, q))
            throw NotAdmissibleAfterMove("chain element above " + poset.label(p) + ": " + poset.label(q));

    std::set<int> u2(d.u2.begin(), d.u2.end());
    const int n = m.coordinate_count();
    const int row = m.coord_pos(p);
    MoveResult result;
    result.element = p;
    result.map = AffineUnimodularMap::identity(n);

    std::vector<std::vector<int>> ending = poset.maximal_chains_ending(p);
    if (ending.size() == 1) {
        // Rule A: fold the unique chain below p into the new order coordinate.
        result.rule = 'A';
        const std::vector<int>& chain = ending[0]; // minimal ... p
        int anchor = -1;
        for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i) {
            int q = chain[i];
            if (u2.count(q)) {
                result.map.matrix[row][m.coord_pos(q)] += 1;
            } else {
                anchor = q;
                break;
            }
        }
        if (anchor < 0) throw Error("chain below " + poset.label(p) + " has no marked or order element");
        if (m.is_marked(anchor))
            result.map.translation[row] += m.marking(anchor);
        else
            result.map.matrix[row][m.coord_pos(anchor)] += 1;
    } else {
        // Rule B: reflect against the unique covering element.
        const auto& up = poset.covering(p);
        if (up.size() != 1) throw IsStarElement("star element cannot be moved: " + poset.label(p));
        result.rule = 'B';
        int r = up[0];
        result.map.matrix[row][row] = -1;
        if (m.is_marked(r))
            result.map.translation[row] += m.marking(r);
        else
            result.map.matrix[row][m.coord_pos(r)] += 1;
    }

    std::vector<int> u1_new = d.u1;
    u1_new.push_back(p);
    result.target = decomposition_from_u1_ids(m, u1_new);
    return result;
}

MoveResult move_to_chain(const MarkedPoset& m, const Decomposition& d, int p) {
    validate_partition(m, d);
    const Poset& poset = m.poset();
    if (!std::binary_search(d.u1.begin(), d.u1.end(), p))
        throw Error("element is not in the order part: " + poset.label(p));
    check_movable(m, p);
    for (int q : d.u1)
        if (poset.less(q, p))
            throw NotAdmissibleAfterMove("order element below " + poset.label(p) + ": " + poset.label(q));

    std::vector<int> u2_new = d.u2;
    u2_new.push_back(p);
    Decomposition target = decomposition_from_u2_ids(m, u2_new);

    // Exact inverse of the opposite move for the target decomposition.
    MoveResult fwd = move_to_order(m, target, p);
    const int row = m.coord_pos(p);
    MoveResult result;
    result.element = p;
    result.rule = fwd.rule;
    result.target = target;
    result.map = fwd.map;
    if (fwd.map.matrix[row][row] == 1) {
        for (int j = 0; j < m.coordinate_count(); ++j)
            if (j != row) result.map.matrix[row][j] = -fwd.map.matrix[row][j];
        result.map.translation[row] = -fwd.map.translation[row];
    }
    // Rule B rows are involutions and stay as they are.
    return result;
}

EquivalenceResult compose_equivalence(const MarkedPoset& m, const Decomposition& d_from,
                                      const Decomposition& d_to) {
    validate_partition(m, d_from);
    validate_partition(m, d_to);
    if (star_signature(m, d_from) != star_signature(m, d_to))
        throw SignatureMismatch("decompositions have different star signatures");

    const Poset& poset = m.poset();
    EquivalenceResult result;
    result.map = AffineUnimodularMap::identity(m.coordinate_count());

    std::set<int> from_u1(d_from.u1.begin(), d_from.u1.end());
    std::set<int> to_u1(d_to.u1.begin(), d_to.u1.end());
    std::vector<int> ups, downs;
    for (int id : d_to.u1)
        if (!from_u1.count(id)) ups.push_back(id);
    for (int id : d_from.u1)
        if (!to_u1.count(id)) downs.push_back(id);
    auto by_rank_desc = [&](int a, int b) { return poset.topo_rank(a) > poset.topo_rank(b); };
    auto by_rank_asc = [&](int a, int b) { return poset.topo_rank(a) < poset.topo_rank(b); };
    std::sort(ups.begin(), ups.end(), by_rank_desc);
    std::sort(downs.begin(), downs.end(), by_rank_asc);

    Decomposition current = d_from;
    try {
        for (int p : ups) {
            MoveResult step = move_to_order(m, current, p);
            result.map = AffineUnimodularMap::composed(step.map, result.map);
            current = step.target;
            result.steps.push_back(std::move(step));
        }
        for (int p : downs) {
            MoveResult step = move_to_chain(m, current, p);
            result.map = AffineUnimodularMap::composed(step.map, result.map);
            current = step.target;
            result.steps.push_back(std::move(step));
        }
    } catch (const Error& e) {
        throw NoPathFound(std::string("move sequence failed: ") + e.what());
    }
    if (!(current == d_to)) throw NoPathFound("move sequence did not reach the target decomposition");
    return result;
}

bool verify_unimodular_equivalence(const MarkedPoset& m, const Decomposition& d1,
                                   const Decomposition& d2, const AffineUnimodularMap& map) {
    mpz_class dt = map.det();
    if (dt != 1 && dt != -1) return false;

    HRep h1 = build_chain_order(m, d1);
    HRep h2 = build_chain_order(m, d2);
    for (Int k : {Int(1), Int(2)}) {
        std::vector<Point> source = enumerate_lattice_points(scale_bounds(h1, k));
        std::vector<Point> expect = enumerate_lattice_points(scale_bounds(h2, k));
        std::set<Point> target(expect.begin(), expect.end());
        std::set<Point> image;
        for (const Point& x : source) image.insert(map.apply(x, k));
        if (image != target) return false;
    }
    return true;
}

} // namespace mcop
