#include <doctest.h>

#include <set>

#include "mcop/gt.hpp"
#include "mcop/lattice.hpp"
#include "mcop/num.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mcop;
using fixtures::gt;

TEST_CASE("the triangular poset has the expected shape") {
    MarkedPoset m = gt(4, {4, 3, 2, 1, 0});
    CHECK(m.poset().size() == 15);
    CHECK(m.marked_ids().size() == 5);

    std::set<std::pair<std::string, std::string>> covers;
    for (const auto& c : m.poset().cover_labels()) covers.insert(c);
    // spot-check both cover families
    CHECK(covers.count({"p03", "p14"}) == 0);
    CHECK(covers.count({"p04", "p14"}) == 1); // p_{i-1,j} -> p_{i,j}
    CHECK(covers.count({"p14", "p03"}) == 1); // p_{i,j} -> p_{i-1,j-1}
    CHECK(covers.count({"p34", "p23"}) == 1);
    CHECK(covers.size() == 2u * 10u); // two covers per (i,j), 1 <= i <= j <= 4

    MarkedPoset tiny = gt(1, {1, 0});
    CHECK(tiny.poset().size() == 3);
    CHECK(tiny.unmarked_ids().size() == 1);

    MarkedPoset two = gt(2, {2, 1, 0});
    // unmarked part is the chain p12 < p22 < p11
    const Poset& p = two.poset();
    CHECK(p.less(p.index("p12"), p.index("p22")));
    CHECK(p.less(p.index("p22"), p.index("p11")));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(build_gt_poset({0, {1}}), Error);
    CHECK_THROWS_AS(build_gt_poset({2, {1, 0}}), Error);
    CHECK_THROWS_AS(build_gt_poset({2, {0, 1, 0}}), Error);
    CHECK_THROWS_AS(build_gt_poset({2, {2, 1, -1}}), Error);
}

TEST_CASE("dimension product formula") {
    CHECK(weyl_dimension({2, {2, 1, 0}}) == 8);
    CHECK(weyl_dimension({2, {0, 0, 0}}) == 1);
    CHECK(weyl_dimension({3, {3, 2, 1, 0}}) == 64);
}

TEST_CASE("dimension formula matches exhaustive pattern counts") {
    for (int n = 1; n <= 3; ++n) {
        // all weakly decreasing markings with top entry <= 3
        std::vector<std::vector<Int>> markings;
        std::vector<Int> current;
        auto build = [&](auto&& self, Int bound) -> void {
            if (static_cast<int>(current.size()) == n + 1) {
                markings.push_back(current);
                return;
            }
            for (Int v = 0; v <= bound; ++v) {
                current.push_back(v);
                self(self, v);
                current.pop_back();
            }
        };
        build(build, 3);
        for (const auto& lambda : markings) {
            MarkedPoset m = gt(n, lambda);
            CHECK(to_mpz(oracles::box_count(build_marked_order(m))) ==
                  weyl_dimension({n, lambda}));
        }
    }
}

TEST_CASE("dimension formula matches counts across decompositions") {
    GTSpec spec{3, {3, 1, 1, 0}};
    MarkedPoset m = build_gt_poset(spec);
    for (const Decomposition& d : enumerate_admissible(m))
        CHECK(to_mpz(count_lattice_points(build_chain_order(m, d))) == weyl_dimension(spec));
}

TEST_CASE("signature class counts double with each size step") {
    CHECK(count_signature_classes(2) == 1);
    CHECK(count_signature_classes(3) == 2);
    CHECK(count_signature_classes(4) == 4);
    CHECK(count_signature_classes(5) == 8);
    CHECK(count_signature_classes(6) == 16);
}

TEST_CASE("strictly decreasing markings are regular") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Int> lambda;
        for (int k = 0; k <= n; ++k) lambda.push_back(n - k);
        CHECK(check_regular(gt(n, lambda)).regular);
    }
}
