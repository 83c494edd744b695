/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "bridge.hh"
#include "oracles.hh"

#include <containment/comparability.hh>
#include <containment/dimension.hh>
#include <containment/errors.hh>
#include <containment/order_core.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace containment;
using std::string;
using std::vector;

namespace
{
    auto chain(int n) -> Poset
    {
        vector<std::pair<string, string>> rel;
        auto names = bridge::labels(n, "x");
        for (int i = 0 ; i + 1 < n ; ++i)
            rel.emplace_back(names[i], names[i + 1]);
        return Poset::from_relations(names, rel);
    }

    auto standard_example() -> Poset
    {
        vector<std::pair<string, string>> rel;
        for (int i = 1 ; i <= 3 ; ++i)
            for (int j = 1 ; j <= 3 ; ++j)
                if (i != j)
                    rel.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
        return Poset::from_relations({ "a1", "a2", "a3", "b1", "b2", "b3" }, rel);
    }

    auto cycle(int n) -> Graph
    {
        Graph g(bridge::labels(n));
        for (int i = 0 ; i < n ; ++i)
            g.add_edge(i, (i + 1) % n);
        return g;
    }

    auto wheel(int rim) -> Graph
    {
        auto names = bridge::labels(rim);
        names.push_back("hub");
        Graph g(names);
        for (int i = 0 ; i < rim ; ++i) {
            g.add_edge(i, (i + 1) % rim);
            g.add_edge(i, rim);
        }
        return g;
    }

    auto order_labels(const Realizer & r) -> vector<vector<string>>
    {
        vector<vector<string>> result;
        for (auto & o : r.orders)
            result.push_back(o.labels);
        return result;
    }

    auto lex_extensions(const Poset & p) -> vector<vector<string>>
    {
        vector<vector<string>> result;
        for (auto & o : linear_extensions(p))
            result.push_back(o.labels);
        return result;
    }
}

TEST_CASE("linear extensions")
{
    CHECK(linear_extensions(Poset({ "a", "b", "c" })).size() == 6);
    CHECK(lex_extensions(Poset::from_relations({ "a", "b", "c" }, { { "a", "b" }, { "b", "c" } }))
            == vector<vector<string>>{ { "a", "b", "c" } });
    CHECK(lex_extensions(Poset::from_relations({ "a", "b", "c" }, { { "a", "c" }, { "b", "c" } }))
            == vector<vector<string>>{ { "a", "b", "c" }, { "b", "a", "c" } });
    CHECK_THROWS_AS(linear_extensions(Poset(bridge::labels(5)), 119), CapExceeded);
    CHECK(linear_extensions(Poset(bridge::labels(5)), 120).size() == 120);
}

TEST_CASE("linear extensions match a permutation filter on every poset up to five elements")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & small : oracle::all_posets(n)) {
            auto p = bridge::to_poset(small);
            auto mine = lex_extensions(p);
            auto expected = oracle::linear_extensions(small);
            REQUIRE(mine.size() == expected.size());
            for (std::size_t i = 0 ; i != mine.size() ; ++i)
                for (int k = 0 ; k < n ; ++k)
                    CHECK(p.index_of(mine[i][k]) == std::size_t(expected[i][k]));
        }
}

TEST_CASE("realizer verification")
{
    Poset two({ "a", "b" });
    CHECK(verify_realizer(two, Realizer{ { { { "a", "b" } }, { { "b", "a" } } } }));
    CHECK(! verify_realizer(two, Realizer{ { { { "a", "b" } } } }));
    CHECK_THROWS_AS(verify_realizer(two, Realizer{ { { { "a", "c" } } } }), LabelMismatch);
    CHECK_THROWS_AS(verify_realizer(two, Realizer{ { { { "a" } } } }), LabelMismatch);

    auto s3 = standard_example();
    auto extensions = linear_extensions(s3);
    for (std::size_t i = 0 ; i != extensions.size() ; ++i)
        for (std::size_t j = i ; j != extensions.size() ; ++j)
            REQUIRE(! verify_realizer(s3, Realizer{ { extensions[i], extensions[j] } }));

    // A non-extension member is rejected even when the intersection would match.
    auto chain2 = Poset::from_relations({ "a", "b" }, { { "a", "b" } });
    CHECK(! verify_realizer(chain2, Realizer{ { { { "b", "a" } } } }));
}

TEST_CASE("dimension of the standard small posets")
{
    CHECK(dimension(chain(1)).dimension == 1);
    CHECK(dimension(chain(5)).dimension == 1);
    CHECK(dimension(Poset({ "a", "b" })).dimension == 2);
    auto s3 = dimension(standard_example());
    CHECK(s3.dimension == 3);
    CHECK(verify_realizer(standard_example(), s3.witness));
    CHECK_THROWS_AS(dimension(Poset{ }), EmptyInput);

    auto lattice = Poset::from_relations({ "empty", "a", "b", "ab" },
            { { "empty", "a" }, { "empty", "b" }, { "a", "ab" }, { "b", "ab" } });
    CHECK(dimension(lattice).dimension == 2);
}

TEST_CASE("every transitive orientation of the eight-cycle has dimension three")
{
    auto c8 = cycle(8);
    auto all = all_transitive_orientations(c8, 64);
    CHECK(all.size() == 2);
    for (auto & o : all) {
        auto p = orientation_to_poset(o);
        CHECK(dimension(p).dimension == 3);
        CHECK(oracle::dimension(bridge::from_poset(p)) == 3);
    }
    CHECK(graph_dimension(c8) == 3);
    CHECK(box_dimension(c8) == 2);
    CHECK(graph_dimension(wheel(8)) == 3);
}

TEST_CASE("graph dimension of trivial graphs")
{
    Graph k2({ "a", "b" });
    k2.add_edge(0, 1);
    CHECK(graph_dimension(k2) == 1);
    CHECK(box_dimension(Graph({ "a" })) == 1);
    CHECK_THROWS_AS(graph_dimension(cycle(5)), NotComparability);
}

TEST_CASE("budget")
{
    try {
        dimension(standard_example(), 2);
        FAIL("expected BudgetExceeded");
    }
    catch (const BudgetExceeded & e) {
        CHECK(e.lower() == 3);
    }
    CHECK(dimension(standard_example(), 3).dimension == 3);
    CHECK(dimension(Poset({ "a", "b" }), 2).dimension == 2);
    CHECK_THROWS_AS(dimension(Poset({ "a", "b" }), 1), BudgetExceeded);
}

TEST_CASE("fast path")
{
    auto antichain = Poset({ "a", "b", "c" });
    auto r = two_realizer(antichain);
    REQUIRE(r);
    CHECK(verify_realizer(antichain, *r));
    CHECK(order_labels(*r) == vector<vector<string>>{ { "a", "b", "c" }, { "c", "b", "a" } });
    CHECK(is_two_dimensional(antichain));
    CHECK(! is_two_dimensional(standard_example()));
    CHECK(is_two_dimensional(chain(4)));
}

TEST_CASE("hiraguchi bound")
{
    CHECK(hiraguchi_bound(8) == 4);
    CHECK(hiraguchi_bound(7) == 4);
    CHECK(hiraguchi_bound(6) == 3);
    CHECK(hiraguchi_bound(1) == 1);
}

TEST_CASE("exact dimension agrees with brute-force subset search on every poset up to six elements")
{
    for (int n = 1 ; n <= 6 ; ++n)
        for (auto & small : oracle::all_posets(n)) {
            auto p = bridge::to_poset(small);
            auto expected = oracle::dimension(small);
            auto fast = dimension(p);
            auto exact = exact_dimension(p);
            REQUIRE(fast.dimension == unsigned(expected));
            REQUIRE(exact.dimension == unsigned(expected));
            CHECK(fast.witness.orders.size() == fast.dimension);
            CHECK(exact.witness.orders.size() == exact.dimension);
            CHECK(oracle::realizes(small, bridge::orders_as_indices(p, order_labels(fast.witness))));
            CHECK(oracle::realizes(small, bridge::orders_as_indices(p, order_labels(exact.witness))));
            CHECK(is_two_dimensional(p) == (expected <= 2));
        }
}

TEST_CASE("exact witness is the lexicographically first minimum family")
{
    auto check_first = [] (const Poset & p) {
        auto result = exact_dimension(p);
        auto all = linear_extensions(p);
        vector<std::size_t> chosen;
        for (auto & o : result.witness.orders)
            chosen.push_back(std::size_t(std::find(all.begin(), all.end(), o) - all.begin()));
        REQUIRE(std::is_sorted(chosen.begin(), chosen.end()));

        // No index set of the same size that precedes it lexicographically realizes p.
        auto k = chosen.size();
        vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (pick < chosen) {
            Realizer r;
            for (auto i : pick)
                r.orders.push_back(all[i]);
            REQUIRE(! verify_realizer(p, r));
            int i = int(k) - 1;
            while (i >= 0 && pick[i] == all.size() - k + std::size_t(i))
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (std::size_t j = i + 1 ; j < k ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    };
    check_first(standard_example());
    check_first(Poset({ "a", "b", "c" }));
    std::mt19937 rng(17);
    for (int trial = 0 ; trial < 30 ; ++trial)
        check_first(bridge::to_poset(oracle::random_poset(5, 0.4, rng)));
}

TEST_CASE("fast path and exact search agree on random posets with eight elements")
{
    std::mt19937 rng(29);
    for (int trial = 0 ; trial < 60 ; ++trial) {
        auto small = oracle::random_poset(8, 0.15 + 0.01 * (trial % 40), rng);
        auto p = bridge::to_poset(small);
        auto exact = exact_dimension(p, unlimited_budget, 50000);
        CHECK(is_two_dimensional(p) == (exact.dimension <= 2));
        CHECK(dimension(p, unlimited_budget, 50000).dimension == exact.dimension);
    }
}
