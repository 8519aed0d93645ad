#include "mcop/faces.hpp"

#include "mcop/num.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mcop/lattice.hpp"

namespace mcop {

namespace {

// Solves A x = b exactly; nullopt when A is singular.
std::optional<std::vector<mpq_class>> solve_square(std::vector<std::vector<mpq_class>> a,
                                                   std::vector<mpq_class> b) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        mpq_class inv = a[col][col];
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            mpq_class factor = a[row][col] / inv;
            for (int k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<mpq_class> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Affine dimension of a point set (-1 for empty, 0 for a single point).
int affine_dim(const std::vector<std::vector<mpq_class>>& points) {
    if (points.empty()) return -1;
    const int n = static_cast<int>(points[0].size());
    std::vector<std::vector<mpq_class>> rows;
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<mpq_class> diff(n);
        for (int j = 0; j < n; ++j) diff[j] = points[i][j] - points[0][j];
        rows.push_back(std::move(diff));
    }
    // Row-reduce to count the rank.
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int row = rank; row < static_cast<int>(rows.size()); ++row)
            if (rows[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int row = 0; row < static_cast<int>(rows.size()); ++row) {
            if (row == rank || rows[row][col] == 0) continue;
            mpq_class factor = rows[row][col] / rows[rank][col];
            for (int k = col; k < n; ++k) rows[row][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace

bool VertexSet::all_integral() const {
    for (const auto& v : vertices)
        for (const auto& c : v)
            if (c.get_den() != 1) return false;
    return true;
}

VertexSet enumerate_vertices(const HRep& h) {
    propagate_box(h); // boundedness check; throws Unbounded

    const int n = h.dimension();
    const auto& ineqs = h.inequalities();
    const int m = static_cast<int>(ineqs.size());
    VertexSet vs;

    if (n == 0) {
        // Zero-dimensional ambient space: the single empty point.
        vs.empty = false;
        vs.dim = 0;
        vs.vertices.push_back({});
        vs.tight.push_back({});
        return vs;
    }

    std::set<std::vector<mpq_class>> seen;
    std::vector<int> pick;
    auto try_subset = [&]() {
        std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
        std::vector<mpq_class> b(n);
        for (int i = 0; i < n; ++i) {
            for (auto [pos, c] : ineqs[pick[i]].terms) a[i][pos] = to_mpq(c);
            b[i] = to_mpq(ineqs[pick[i]].bound);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x || !h.contains(*x)) return;
        seen.insert(*x);
    };
    auto choose = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == n) {
            try_subset();
            return;
        }
        for (int i = start; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);

    if (seen.empty()) return vs; // empty polytope, distinct signal
    vs.empty = false;
    for (const auto& v : seen) {
        std::vector<int> tight;
        for (int i = 0; i < m; ++i) {
            mpq_class lhs = 0;
            for (auto [pos, c] : ineqs[i].terms) lhs += to_mpq(c) * v[pos];
            if (lhs == to_mpq(ineqs[i].bound)) tight.push_back(i);
        }
        vs.vertices.push_back(v);
        vs.tight.push_back(std::move(tight));
    }
    vs.dim = affine_dim(vs.vertices);
    return vs;
}

std::vector<std::vector<int>> geometric_facets(const HRep& h, const VertexSet& vs) {
    std::set<std::vector<int>> facets;
    const int m = static_cast<int>(h.inequalities().size());
    for (int i = 0; i < m; ++i) {
        std::vector<int> on_face;
        std::vector<std::vector<mpq_class>> pts;
        for (size_t v = 0; v < vs.vertices.size(); ++v) {
            if (std::binary_search(vs.tight[v].begin(), vs.tight[v].end(), i)) {
                on_face.push_back(static_cast<int>(v));
                pts.push_back(vs.vertices[v]);
            }
        }
        // A facet of a positive-dimensional polytope carries vertices; the
        // empty set would otherwise slip in for zero-dimensional systems.
        if (!on_face.empty() && affine_dim(pts) == vs.dim - 1) facets.insert(on_face);
    }
    return {facets.begin(), facets.end()};
}

Int facet_count_formula(const MarkedPoset& m, const Decomposition& d) {
    RegularityReport reg = check_regular(m);
    if (!reg.regular) {
        std::string msg = "marked poset is not regular:";
        for (const auto& v : reg.violations) msg += " [" + std::to_string(v.condition) + "] " + v.note + ";";
        throw RegularityRequired(msg);
    }
    validate_partition(m, d);
    std::set<int> a1;
    for (int id : m.marked_ids()) a1.insert(id);
    for (int id : d.u1) a1.insert(id);

    Int covers_in_a1 = 0;
    for (auto [lo, hi] : m.poset().covers())
        if (a1.count(lo) && a1.count(hi)) ++covers_in_a1;
    return covers_in_a1 + static_cast<Int>(d.u2.size()) + static_cast<Int>(u2_chains(m, d).size());
}

Int facet_difference(const MarkedPoset& m, const Decomposition& d_u, const Decomposition& d_v, int q) {
    std::vector<int> sig_u = star_signature(m, d_u);
    std::vector<int> sig_v = star_signature(m, d_v);
    std::vector<int> expected = sig_u;
    expected.push_back(q);
    std::sort(expected.begin(), expected.end());
    std::vector<int> stars = star_elements(m);
    if (!std::binary_search(stars.begin(), stars.end(), q))
        throw PreconditionViolated("element is not a star element: " + m.poset().label(q));
    if (sig_v != expected)
        throw PreconditionViolated("chain-side star sets do not differ exactly by " + m.poset().label(q));

    std::vector<Int> ending = m.poset().chains_ending_counts();
    Int product = (static_cast<Int>(m.poset().covering(q).size()) - 1) * (ending[q] - 1);
    Int by_formula = facet_count_formula(m, d_v) - facet_count_formula(m, d_u);
    if (product != by_formula)
        throw Error("facet difference mismatch: product " + std::to_string(product) +
                    " vs counts " + std::to_string(by_formula));
    return product;
}

FVector f_vector_of(const HRep& h, const VertexSet& vs) {
    if (vs.empty) throw Error("f-vector of an empty polytope");
    const size_t nv = vs.vertices.size();

    std::vector<std::vector<int>> facets = geometric_facets(h, vs);
    std::vector<std::set<int>> facet_sets;
    for (const auto& f : facets) facet_sets.emplace_back(f.begin(), f.end());

    // Faces are the intersections of facet vertex sets, plus the polytope.
    std::set<std::vector<int>> faces;
    std::vector<int> everything;
    for (size_t i = 0; i < nv; ++i) everything.push_back(static_cast<int>(i));
    faces.insert(everything);
    std::vector<std::vector<int>> queue{everything};
    while (!queue.empty()) {
        std::vector<int> face = std::move(queue.back());
        queue.pop_back();
        for (const auto& fs : facet_sets) {
            std::vector<int> inter;
            for (int v : face)
                if (fs.count(v)) inter.push_back(v);
            if (inter.empty() || inter.size() == face.size()) continue;
            if (faces.insert(inter).second) queue.push_back(inter);
        }
    }

    FVector fv;
    fv.f.assign(vs.dim + 1, 0);
    for (const auto& face : faces) {
        std::vector<std::vector<mpq_class>> pts;
        for (int v : face) pts.push_back(vs.vertices[v]);
        int fd = affine_dim(pts);
        if (fd >= 0) ++fv.f[fd];
    }
    return fv;
}

FVector f_vector(const HRep& h) {
    VertexSet vs = enumerate_vertices(h);
    return f_vector_of(h, vs);
}

ConjectureReport test_f_conjecture(const MarkedPoset& m) {
    ConjectureReport report;
    report.decompositions = enumerate_admissible(m);
    for (const auto& d : report.decompositions)
        report.f_vectors.push_back(f_vector(build_chain_order(m, d)));

    for (size_t i = 0; i < report.decompositions.size(); ++i) {
        for (size_t j = 0; j < report.decompositions.size(); ++j) {
            if (i == j) continue;
            const auto& du = report.decompositions[i];
            const auto& dv = report.decompositions[j];
            if (!std::includes(dv.u1.begin(), dv.u1.end(), du.u1.begin(), du.u1.end())) continue;
            if (dv.u1.size() == du.u1.size()) continue; // strict inclusion only

            ConjecturePair pair;
            pair.fine = du;
            pair.coarse = dv;
            pair.f_fine = report.f_vectors[i];
            pair.f_coarse = report.f_vectors[j];
            size_t len = std::max(pair.f_fine.f.size(), pair.f_coarse.f.size());
            for (size_t k = 0; k < len; ++k) {
                long long fine = k < pair.f_fine.f.size() ? pair.f_fine.f[k] : 0;
                long long coarse = k < pair.f_coarse.f.size() ? pair.f_coarse.f[k] : 0;
                if (coarse > fine) pair.violations.push_back(static_cast<int>(k));
            }
            for (int k : pair.violations) {
                ++report.total_violations;
                if (k == static_cast<int>(pair.f_fine.f.size()) - 2) ++report.facet_violations;
            }
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

} // namespace mcop
