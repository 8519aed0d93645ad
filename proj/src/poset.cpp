#include "mcop/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace mcop {

namespace {

std::string join_labels(const Poset& p, const std::vector<int>& ids, const char* sep = ", ") {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += sep;
        out += p.label(ids[i]);
    }
    return out;
}

} // namespace

int Poset::index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownElement("unknown element: " + label);
    return it->second;
}

void Poset::check_id(int id) const {
    if (id < 0 || id >= size()) throw UnknownElement("element id out of range");
}

bool Poset::leq(int p, int q) const {
    check_id(p);
    check_id(q);
    return leq_[p][q];
}

const std::vector<int>& Poset::covering(int p) const {
    check_id(p);
    return up_[p];
}

const std::vector<int>& Poset::covered(int p) const {
    check_id(p);
    return down_[p];
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (down_[i].empty()) out.push_back(i);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (up_[i].empty()) out.push_back(i);
    return out;
}

std::vector<std::pair<std::string, std::string>> Poset::cover_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(covers_.size());
    for (auto [lo, hi] : covers_) out.emplace_back(labels_[lo], labels_[hi]);
    return out;
}

Poset Poset::from_relations(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
    Poset p;
    for (const auto& label : elements) {
        if (label.empty()) throw Error("empty element label");
        if (p.index_.count(label)) throw Error("duplicate element label: " + label);
        p.index_[label] = static_cast<int>(p.labels_.size());
        p.labels_.push_back(label);
    }
    const int n = p.size();

    std::vector<std::set<int>> raw(n);
    for (const auto& [lo, hi] : relations) {
        int a = p.index(lo), b = p.index(hi);
        if (a == b) throw CycleError("relation has a cycle: " + lo + " < " + lo);
        raw[a].insert(b);
    }

    // Cycle detection with explicit path recovery.
    {
        std::vector<int> color(n, 0), parent(n, -1);
        for (int start = 0; start < n; ++start) {
            if (color[start] != 0) continue;
            std::vector<std::pair<int, std::set<int>::iterator>> stack;
            color[start] = 1;
            stack.emplace_back(start, raw[start].begin());
            while (!stack.empty()) {
                auto& [v, it] = stack.back();
                if (it == raw[v].end()) {
                    color[v] = 2;
                    stack.pop_back();
                    continue;
                }
                int w = *it;
                ++it;
                if (color[w] == 1) {
                    std::vector<int> cycle{w};
                    for (auto r = stack.rbegin(); r != stack.rend(); ++r) {
                        cycle.push_back(r->first);
                        if (r->first == w) break;
                    }
                    std::reverse(cycle.begin(), cycle.end());
                    throw CycleError("relation has a cycle: " + join_labels(p, cycle, " < "));
                }
                if (color[w] == 0) {
                    color[w] = 1;
                    parent[w] = v;
                    stack.emplace_back(w, raw[w].begin());
                }
            }
        }
    }

    // Transitive closure (reflexive), then reduction.
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) {
        std::vector<int> stack{i};
        p.leq_[i][i] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : raw[v])
                if (!p.leq_[i][w]) {
                    p.leq_[i][w] = true;
                    stack.push_back(w);
                }
        }
    }

    p.up_.assign(n, {});
    p.down_.assign(n, {});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !p.leq_[a][b]) continue;
            bool is_cover = true;
            for (int w = 0; w < n && is_cover; ++w)
                if (w != a && w != b && p.leq_[a][w] && p.leq_[w][b]) is_cover = false;
            if (is_cover) {
                p.covers_.emplace_back(a, b);
                p.up_[a].push_back(b);
                p.down_[b].push_back(a);
            }
        }
    std::sort(p.covers_.begin(), p.covers_.end());

    // Topological order, smallest input index first.
    {
        std::vector<int> indeg(n);
        for (int i = 0; i < n; ++i) indeg[i] = static_cast<int>(p.down_[i].size());
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.push(i);
        while (!ready.empty()) {
            int v = ready.top();
            ready.pop();
            p.topo_.push_back(v);
            for (int w : p.up_[v])
                if (--indeg[w] == 0) ready.push(w);
        }
        p.topo_rank_.assign(n, -1);
        for (int r = 0; r < n; ++r) p.topo_rank_[p.topo_[r]] = r;
    }
    return p;
}

std::vector<std::vector<int>> Poset::maximal_chains_ending(int p) const {
    check_id(p);
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (down_[v].empty()) {
            out.emplace_back(path.rbegin(), path.rend());
        } else {
            for (int w : down_[v]) self(self, w);
        }
        path.pop_back();
    };
    dfs(dfs, p);
    return out;
}

std::vector<std::vector<int>> Poset::maximal_chains_starting(int p) const {
    check_id(p);
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto dfs = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (up_[v].empty()) {
            out.push_back(path);
        } else {
            for (int w : up_[v]) self(self, w);
        }
        path.pop_back();
    };
    dfs(dfs, p);
    return out;
}

std::vector<Int> Poset::chains_ending_counts() const {
    std::vector<Int> cnt(size(), 0);
    for (int v : topo_) {
        if (down_[v].empty()) {
            cnt[v] = 1;
        } else {
            for (int w : down_[v]) cnt[v] += cnt[w];
        }
    }
    return cnt;
}

bool Poset::operator==(const Poset& other) const {
    return labels_ == other.labels_ && covers_ == other.covers_;
}

// ---------------------------------------------------------------------------

MarkedPoset::MarkedPoset(Poset poset, const std::map<std::string, Int>& marking)
    : poset_(std::move(poset)) {
    std::map<int, Int> by_id;
    for (const auto& [label, value] : marking) by_id[poset_.index(label)] = value;
    init(by_id);
}

MarkedPoset::MarkedPoset(Poset poset, const std::map<int, Int>& marking_by_id)
    : poset_(std::move(poset)) {
    init(marking_by_id);
}

void MarkedPoset::init(const std::map<int, Int>& marking_by_id) {
    const int n = poset_.size();
    marking_.assign(n, std::nullopt);
    for (const auto& [id, value] : marking_by_id) {
        if (id < 0 || id >= n) throw UnknownElement("marking refers to an unknown element");
        if (value < 0) throw Error("marking value must be nonnegative: " + poset_.label(id));
        marking_[id] = value;
    }
    for (int i = 0; i < n; ++i) {
        if (marking_[i].has_value())
            marked_.push_back(i);
    }
    for (int id : poset_.topo_order()) {
        if (!marking_[id].has_value()) {
            coord_pos_[id] = static_cast<int>(unmarked_.size());
            unmarked_.push_back(id);
        } else {
            coord_pos_[id] = -1;
        }
    }
    for (int i = 0; i < n; ++i) {
        bool extremal = poset_.covered(i).empty() || poset_.covering(i).empty();
        if (extremal && !marking_[i].has_value())
            throw Error("extremal element must be marked: " + poset_.label(i));
    }
}

Int MarkedPoset::marking(int id) const {
    if (id < 0 || id >= poset_.size()) throw UnknownElement("element id out of range");
    if (!marking_[id].has_value()) throw Error("element is not marked: " + poset_.label(id));
    return *marking_[id];
}

std::map<std::string, Int> MarkedPoset::marking_labels() const {
    std::map<std::string, Int> out;
    for (int id : marked_) out[poset_.label(id)] = *marking_[id];
    return out;
}

MarkedPoset MarkedPoset::scaled(Int k) const {
    if (k < 0) throw Error("dilation factor must be nonnegative");
    std::map<int, Int> m;
    for (int id : marked_) m[id] = *marking_[id] * k;
    return MarkedPoset(poset_, m);
}

MarkedPoset MarkedPoset::extended(const std::vector<int>& ids, const std::vector<Int>& values) const {
    if (ids.size() != values.size()) throw DimensionMismatch("extension ids/values size mismatch");
    std::map<int, Int> m;
    for (int id : marked_) m[id] = *marking_[id];
    for (size_t i = 0; i < ids.size(); ++i) {
        if (marking_[ids[i]].has_value()) throw Error("element already marked: " + poset_.label(ids[i]));
        m[ids[i]] = values[i];
    }
    return MarkedPoset(poset_, m);
}

MarkedPoset MarkedPoset::with_marking(const std::map<int, Int>& marking_by_id) const {
    if (marking_by_id.size() != marked_.size()) throw DimensionMismatch("marking must cover exactly the marked set");
    for (int id : marked_)
        if (!marking_by_id.count(id)) throw DimensionMismatch("marking must cover exactly the marked set");
    return MarkedPoset(poset_, marking_by_id);
}

bool MarkedPoset::marked_linearly_ordered() const {
    for (size_t i = 0; i < marked_.size(); ++i)
        for (size_t j = i + 1; j < marked_.size(); ++j)
            if (!poset_.leq(marked_[i], marked_[j]) && !poset_.leq(marked_[j], marked_[i]))
                return false;
    return true;
}

// ---------------------------------------------------------------------------

std::vector<int> star_elements(const MarkedPoset& m) {
    const Poset& p = m.poset();
    std::vector<Int> ending = p.chains_ending_counts();
    std::vector<int> out;
    for (int id : m.unmarked_ids())
        if (p.covering(id).size() >= 2 && ending[id] >= 2) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

RegularityReport check_regular(const MarkedPoset& m) {
    const Poset& p = m.poset();
    RegularityReport report;

    for (auto [lo, hi] : p.covers()) {
        if (m.is_marked(lo) && m.is_marked(hi))
            report.violations.push_back({1, {lo, hi},
                "cover between marked elements " + p.label(lo) + " -> " + p.label(hi)});
    }
    const auto& marked = m.marked_ids();
    for (size_t i = 0; i < marked.size(); ++i)
        for (size_t j = i + 1; j < marked.size(); ++j)
            if (m.marking(marked[i]) == m.marking(marked[j]))
                report.violations.push_back({2, {marked[i], marked[j]},
                    "equal markings on " + p.label(marked[i]) + " and " + p.label(marked[j])});
    for (auto [lo, hi] : p.covers()) {
        if (m.is_marked(lo) && !m.is_marked(hi)) {
            for (int b : marked)
                if (b != lo && p.less(b, hi) && m.marking(lo) < m.marking(b))
                    report.violations.push_back({3, {lo, hi, b},
                        p.label(lo) + " -> " + p.label(hi) + " but " + p.label(b) +
                        " below carries a larger marking"});
        }
        if (!m.is_marked(lo) && m.is_marked(hi)) {
            for (int b : marked)
                if (b != hi && p.less(lo, b) && m.marking(b) < m.marking(hi))
                    report.violations.push_back({4, {lo, hi, b},
                        p.label(lo) + " -> " + p.label(hi) + " but " + p.label(b) +
                        " above carries a smaller marking"});
        }
    }
    report.regular = report.violations.empty();
    return report;
}

namespace {

// Contracts the closed interval [lo, hi] to a single marked element.
// Returns the contracted marked poset and the old->new id map.
RegularizeResult contract_interval(const MarkedPoset& m, int lo, int hi) {
    const Poset& p = m.poset();
    const int n = p.size();
    std::vector<bool> inside(n, false);
    for (int z = 0; z < n; ++z) inside[z] = p.leq(lo, z) && p.leq(z, hi);

    std::vector<std::string> new_labels;
    std::vector<int> old_to_new(n, -1);
    int merged = -1;
    for (int z = 0; z < n; ++z) {
        if (inside[z]) {
            if (merged < 0) {
                merged = static_cast<int>(new_labels.size());
                new_labels.push_back(p.label(lo));
            }
            old_to_new[z] = merged;
        } else {
            old_to_new[z] = static_cast<int>(new_labels.size());
            new_labels.push_back(p.label(z));
        }
    }

    std::vector<std::pair<std::string, std::string>> relations;
    for (auto [a, b] : p.covers()) {
        int na = old_to_new[a], nb = old_to_new[b];
        if (na != nb) relations.emplace_back(new_labels[na], new_labels[nb]);
    }
    Poset np = Poset::from_relations(new_labels, relations);

    std::map<int, Int> marking;
    for (int id : m.marked_ids()) marking[np.index(new_labels[old_to_new[id]])] = m.marking(id);

    std::vector<int> element_map(n);
    for (int z = 0; z < n; ++z) element_map[z] = np.index(new_labels[old_to_new[z]]);
    return {MarkedPoset(std::move(np), marking), element_map};
}

} // namespace

RegularizeResult regularize(const MarkedPoset& m) {
    MarkedPoset current = m;
    std::vector<int> total_map(m.poset().size());
    for (size_t i = 0; i < total_map.size(); ++i) total_map[i] = static_cast<int>(i);

    for (;;) {
        RegularityReport report = check_regular(current);
        if (report.regular) return {current, total_map};

        const Poset& p = current.poset();
        const auto& marked = current.marked_ids();
        int pick_lo = -1, pick_hi = -1;
        for (size_t i = 0; i < marked.size() && pick_lo < 0; ++i) {
            for (size_t j = i + 1; j < marked.size() && pick_lo < 0; ++j) {
                int a = marked[i], b = marked[j];
                if (current.marking(a) != current.marking(b)) continue;
                int lo, hi;
                if (p.leq(a, b)) {
                    lo = a;
                    hi = b;
                } else if (p.leq(b, a)) {
                    lo = b;
                    hi = a;
                } else {
                    continue;
                }
                // The whole interval must agree on the marking, otherwise the
                // contraction would not preserve the polytope.
                bool clean = true;
                for (int z : marked)
                    if (p.leq(lo, z) && p.leq(z, hi) && current.marking(z) != current.marking(lo))
                        clean = false;
                if (clean) {
                    pick_lo = lo;
                    pick_hi = hi;
                }
            }
        }
        if (pick_lo < 0) {
            std::ostringstream msg;
            msg << "no retraction applies; remaining violations:";
            for (const auto& v : report.violations) msg << " [" << v.condition << "] " << v.note << ";";
            throw NotRegularizable(msg.str());
        }
        RegularizeResult step = contract_interval(current, pick_lo, pick_hi);
        for (size_t i = 0; i < total_map.size(); ++i) total_map[i] = step.element_map[total_map[i]];
        current = step.poset;
    }
}

} // namespace mcop
