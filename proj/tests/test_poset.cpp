#include <doctest.h>

#include <algorithm>
#include <set>

#include "mcop/lattice.hpp"
#include "mcop/poset.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mcop;
using fixtures::branched9;
using fixtures::gt;
using fixtures::linear_chain;

namespace {

std::vector<std::string> label_set(const Poset& p, const std::vector<int>& ids) {
    std::vector<std::string> out;
    for (int id : ids) out.push_back(p.label(id));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("relations reduce to covers") {
    Poset p = Poset::from_relations({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}, {"c", "a"}});
    CHECK(p.cover_labels() == std::vector<std::pair<std::string, std::string>>{{"b", "a"}, {"c", "b"}});
}

TEST_CASE("an already reduced cover list is kept as is") {
    MarkedPoset m = branched9();
    std::vector<std::pair<std::string, std::string>> covers = {
        {"1", "3"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "9"}, {"4", "6"}, {"6", "7"}, {"6", "8"}};
    Poset again = Poset::from_relations(m.poset().labels(), covers);
    CHECK(again == m.poset());
}

TEST_CASE("cyclic input is rejected with a named cycle") {
    CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(Poset::from_relations({"a"}, {{"a", "a"}}), CycleError);
    CHECK_THROWS_AS(Poset::from_relations({"a"}, {{"a", "z"}}), UnknownElement);
}

TEST_CASE("reduction is idempotent") {
    Poset p = Poset::from_relations({"u", "v", "w", "x", "y"},
                                    {{"u", "v"}, {"u", "w"}, {"v", "x"}, {"w", "x"}, {"u", "x"}, {"x", "y"}, {"u", "y"}});
    Poset q = Poset::from_relations(p.labels(), p.cover_labels());
    CHECK(p == q);
}

TEST_CASE("order queries on the linear chain") {
    MarkedPoset m = linear_chain();
    const Poset& p = m.poset();
    CHECK(p.leq(p.index("x3"), p.index("x1")));
    CHECK_FALSE(p.leq(p.index("x1"), p.index("x3")));
    for (int i = 0; i < p.size(); ++i) CHECK(p.leq(i, i));
    CHECK(label_set(p, p.covering(p.index("x2"))) == std::vector<std::string>{"x1"});
}

TEST_CASE("order queries on the branched poset") {
    MarkedPoset m = branched9();
    const Poset& p = m.poset();
    CHECK_FALSE(p.leq(p.index("5"), p.index("6")));
    CHECK_FALSE(p.leq(p.index("6"), p.index("5")));
    CHECK(label_set(p, p.covered(p.index("3"))) == std::vector<std::string>{"1", "2"});
    CHECK(label_set(p, p.covering(p.index("3"))) == std::vector<std::string>{"4"});
}

TEST_CASE("covering elements in the triangular poset") {
    MarkedPoset m = gt(3, {3, 2, 1, 0});
    const Poset& p = m.poset();
    CHECK(label_set(p, p.covering(p.index("p12"))) == std::vector<std::string>{"p01", "p22"});
}

TEST_CASE("maximal chains starting and ending") {
    MarkedPoset m = branched9();
    const Poset& p = m.poset();

    auto starting = p.maximal_chains_starting(p.index("3"));
    std::set<std::vector<std::string>> got;
    for (const auto& chain : starting) {
        std::vector<std::string> labels;
        for (int id : chain) labels.push_back(p.label(id));
        got.insert(labels);
    }
    std::set<std::vector<std::string>> expected = {
        {"3", "4", "5", "9"}, {"3", "4", "6", "7"}, {"3", "4", "6", "8"}};
    CHECK(got == expected);

    CHECK(p.maximal_chains_ending(p.index("4")).size() == 2);

    MarkedPoset chain = linear_chain();
    CHECK(chain.poset().maximal_chains_ending(chain.poset().index("x1")).size() == 1);
}

TEST_CASE("chain counting matches chain listing") {
    for (const MarkedPoset& m : {branched9(), gt(3, {3, 2, 1, 0}), linear_chain()}) {
        std::vector<Int> counts = m.poset().chains_ending_counts();
        for (int id = 0; id < m.poset().size(); ++id)
            CHECK(counts[id] == static_cast<Int>(m.poset().maximal_chains_ending(id).size()));
    }
}

TEST_CASE("star elements") {
    CHECK(star_elements(linear_chain()).empty());

    MarkedPoset nine = branched9();
    CHECK(label_set(nine.poset(), star_elements(nine)) == std::vector<std::string>{"4", "6"});

    for (int n = 2; n <= 5; ++n) {
        std::vector<Int> lambda;
        for (int k = 0; k <= n; ++k) lambda.push_back(n - k);
        MarkedPoset m = gt(n, lambda);
        std::vector<std::string> expected;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j < n; ++j) expected.push_back(gt_label(i, j));
        std::sort(expected.begin(), expected.end());
        CHECK(label_set(m.poset(), star_elements(m)) == expected);
    }
}

TEST_CASE("star elements ignore marking values and every unmarked element is covered") {
    MarkedPoset a = branched9();
    MarkedPoset b = branched9({{"1", 1}, {"2", 0}, {"9", 6}, {"7", 2}, {"8", 3}});
    CHECK(star_elements(a) == star_elements(b));

    for (const MarkedPoset& m : {a, linear_chain(), gt(3, {3, 2, 1, 0})}) {
        std::vector<Int> counts = m.poset().chains_ending_counts();
        for (int id : m.unmarked_ids()) {
            CHECK(m.poset().covering(id).size() >= 1);
            CHECK(counts[id] >= 1);
        }
    }
}

TEST_CASE("regularity check") {
    CHECK(check_regular(gt(4, {4, 3, 2, 1, 0})).regular);
    CHECK(check_regular(linear_chain()).regular);

    RegularityReport equal_marks = check_regular(linear_chain(0, 0));
    CHECK_FALSE(equal_marks.regular);
    REQUIRE(equal_marks.violations.size() == 1);
    CHECK(equal_marks.violations[0].condition == 2);

    MarkedPoset g = gt(2, {2, 2, 0});
    RegularityReport r = check_regular(g);
    CHECK_FALSE(r.regular);
    bool found = false;
    for (const auto& v : r.violations) {
        if (v.condition == 2 && label_set(g.poset(), v.witnesses) == std::vector<std::string>{"p00", "p01"})
            found = true;
    }
    CHECK(found);

    // 3 covers both minimal marked elements, so whichever carries the smaller
    // marking violates condition 3.
    RegularityReport nine = check_regular(branched9());
    CHECK_FALSE(nine.regular);
    bool has3 = false;
    for (const auto& v : nine.violations) has3 = has3 || v.condition == 3;
    CHECK(has3);
}

TEST_CASE("condition 4 is detected") {
    // x is covered by the top marked element a, while a parallel marked b
    // above x carries a smaller marking.
    Poset p = Poset::from_relations({"bot", "x", "a", "b"},
                                    {{"bot", "x"}, {"x", "a"}, {"x", "b"}});
    MarkedPoset m(std::move(p), std::map<std::string, Int>{{"bot", 0}, {"a", 5}, {"b", 3}});
    RegularityReport r = check_regular(m);
    bool has4 = false;
    for (const auto& v : r.violations) has4 = has4 || v.condition == 4;
    CHECK(has4);
}

TEST_CASE("regularization fixes nothing on regular input") {
    MarkedPoset m = linear_chain();
    RegularizeResult r = regularize(m);
    CHECK(r.poset.poset() == m.poset());
    for (size_t i = 0; i < r.element_map.size(); ++i) CHECK(r.element_map[i] == static_cast<int>(i));
}

TEST_CASE("equal markings at the ends of a chain collapse it") {
    MarkedPoset m = linear_chain(6, 6);
    RegularizeResult r = regularize(m);
    CHECK(r.poset.poset().size() == 1);
    CHECK(r.poset.unmarked_ids().empty());
    CHECK(check_regular(r.poset).regular);
    // The original order polytope is the single point (6,6,6).
    CHECK(count_lattice_points(build_marked_order(m)) == 1);
    CHECK(count_lattice_points(build_marked_order(r.poset)) == 1);
}

TEST_CASE("partial collapse preserves lattice point counts") {
    MarkedPoset m = gt(2, {2, 1, 1});
    RegularizeResult r = regularize(m);
    CHECK(check_regular(r.poset).regular);
    CHECK(count_lattice_points(build_marked_order(m)) ==
          count_lattice_points(build_marked_order(r.poset)));
    CHECK(count_lattice_points(build_marked_chain(m)) ==
          count_lattice_points(build_marked_chain(r.poset)));

    MarkedPoset two = linear_chain(3, 3);
    RegularizeResult rr = regularize(two);
    CHECK(count_lattice_points(build_marked_chain(two)) ==
          count_lattice_points(build_marked_chain(rr.poset)));
}

TEST_CASE("unmergeable violations surface as a failure") {
    // Two incomparable minimal elements with the same marking cannot be
    // retracted.
    Poset p = Poset::from_relations({"a", "b", "x", "top"}, {{"a", "x"}, {"b", "x"}, {"x", "top"}});
    MarkedPoset m(std::move(p), std::map<std::string, Int>{{"a", 3}, {"b", 3}, {"top", 9}});
    CHECK_THROWS_AS(regularize(m), NotRegularizable);

    // The branched fixture violates condition 3 with pairwise distinct
    // markings, so no retraction ever applies.
    CHECK_THROWS_AS(regularize(branched9()), NotRegularizable);
}

TEST_CASE("marked poset construction validates its input") {
    Poset p = Poset::from_relations({"a", "b"}, {{"a", "b"}});
    CHECK_THROWS_AS(MarkedPoset(p, std::map<std::string, Int>{{"a", 0}}), Error); // b unmarked extremal
    CHECK_THROWS_AS(MarkedPoset(p, std::map<std::string, Int>{{"a", 0}, {"b", -1}}), Error);
}
