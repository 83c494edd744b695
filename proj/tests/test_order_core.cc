/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "bridge.hh"
#include "oracles.hh"

#include <containment/errors.hh>
#include <containment/order_core.hh>

#include <doctest.h>

#include <random>

using namespace containment;
using std::string;
using std::vector;

namespace
{
    auto path(const vector<string> & labels) -> Graph
    {
        Graph g(labels);
        for (std::size_t i = 0 ; i + 1 < labels.size() ; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    auto cycle(const vector<string> & labels) -> Graph
    {
        auto g = path(labels);
        g.add_edge(labels.size() - 1, 0);
        return g;
    }

    auto complete(const vector<string> & labels) -> Graph
    {
        Graph g(labels);
        for (std::size_t a = 0 ; a != labels.size() ; ++a)
            for (std::size_t b = a + 1 ; b != labels.size() ; ++b)
                g.add_edge(a, b);
        return g;
    }

    auto chain(const vector<string> & labels) -> Poset
    {
        vector<std::pair<string, string>> rel;
        for (std::size_t i = 0 ; i + 1 < labels.size() ; ++i)
            rel.emplace_back(labels[i], labels[i + 1]);
        return Poset::from_relations(labels, rel);
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
}

TEST_CASE("labels must be unique, non-empty and free of whitespace")
{
    CHECK_THROWS_AS(Graph({ "a", "a" }), InvariantViolation);
    CHECK_THROWS_AS(Graph({ "" }), InvariantViolation);
    CHECK_THROWS_AS(Graph({ "a b" }), InvariantViolation);
    CHECK_NOTHROW(Graph({ "a#1", "x<y" }));
    CHECK_THROWS_AS(Graph({ "a" }).index_of("b"), UnknownVertex);
}

TEST_CASE("graph edges and self-loops")
{
    Graph g({ "a", "b", "c" });
    g.add_edge(0, 2);
    CHECK(g.adjacent("a", "c"));
    CHECK(g.adjacent("c", "a"));
    CHECK(! g.adjacent("a", "b"));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), InvariantViolation);
    g.remove_edge(2, 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("poset construction closes transitively and rejects cycles")
{
    auto p = Poset::from_relations({ "a", "b", "c" }, { { "a", "b" }, { "b", "c" } });
    CHECK(p.less("a", "c"));
    CHECK(p.relation_count() == 3);
    CHECK(p.covers().size() == 2);
    CHECK(p.is_chain());

    try {
        Poset::from_relations({ "a", "b", "c" }, { { "a", "b" }, { "b", "c" }, { "c", "a" } });
        FAIL("expected a cycle");
    }
    catch (const CycleDetected & e) {
        CHECK(e.cycle().size() == 3);
    }
    CHECK_THROWS_AS(Poset::from_relations({ "a" }, { { "a", "a" } }), CycleDetected);
}

TEST_CASE("transitive_closure_build")
{
    auto p = transitive_closure_build({ "a", "b", "c" }, { { "a", "b" }, { "b", "c" } });
    CHECK(p.less("a", "c"));
    CHECK_THROWS_AS(transitive_closure_build({ "a", "b" }, { { "a", "b" }, { "b", "a" } }), CycleDetected);
    auto antichain = transitive_closure_build({ "a", "b", "c", "d" }, { });
    CHECK(antichain.relation_count() == 0);
    CHECK(antichain.size() == 4);
}

TEST_CASE("complement")
{
    CHECK(complement(complete({ "a", "b", "c" })).edge_count() == 0);
    auto c5 = cycle({ "1", "2", "3", "4", "5" });
    CHECK(complement(c5).edge_count() == 5);
    for (std::size_t v = 0 ; v != 5 ; ++v)
        CHECK(complement(c5).degree(v) == 2);
    Graph k1({ "a" });
    CHECK(complement(k1) == k1);
}

TEST_CASE("complement is an involution on every graph with up to five vertices")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & small : oracle::all_graphs(n)) {
            auto g = bridge::to_graph(small);
            CHECK(complement(complement(g)) == g);
            CHECK(complement(g) == bridge::to_graph(oracle::complement(small)));
        }
}

TEST_CASE("induced substructures")
{
    auto p4 = path({ "a", "b", "c", "d" });
    auto ac = induced(p4, { "a", "c" });
    CHECK(ac.size() == 2);
    CHECK(ac.edge_count() == 0);
    CHECK(induced(p4, { "a", "b", "c", "d" }) == p4);
    CHECK_THROWS_AS(induced(p4, { "a", "z" }), UnknownVertex);

    auto lattice = Poset::from_relations({ "empty", "a", "b", "ab" },
            { { "empty", "a" }, { "empty", "b" }, { "a", "ab" }, { "b", "ab" } });
    auto v = induced(lattice, { "empty", "a", "b" });
    CHECK(v.size() == 3);
    CHECK(v.less("empty", "a"));
    CHECK(v.less("empty", "b"));
    CHECK(! v.comparable(v.index_of("a"), v.index_of("b")));
}

TEST_CASE("graph intersection and union")
{
    auto p3 = path({ "a", "b", "c" });
    Graph bc({ "a", "b", "c" });
    bc.add_edge(1, 2);
    vector<Graph> both{ p3, bc };
    auto i = graph_intersection(both);
    CHECK(i.edge_count() == 1);
    CHECK(i.adjacent("b", "c"));

    vector<Graph> with_complement{ p3, complement(p3) };
    CHECK(graph_intersection(with_complement).edge_count() == 0);
    CHECK(graph_union(with_complement) == complete({ "a", "b", "c" }));

    vector<Graph> mismatched{ p3, Graph({ "a", "b", "d" }) };
    CHECK_THROWS_AS(graph_intersection(mismatched), LabelMismatch);
    CHECK_THROWS(graph_union(std::span<const Graph>{ }));
}

TEST_CASE("intersection matches labels, not positions")
{
    Graph a({ "x", "y", "z" }), b({ "z", "y", "x" });
    a.add_edge(0, 1);
    b.add_edge(1, 2);
    vector<Graph> both{ a, b };
    auto i = graph_intersection(both);
    CHECK(i.adjacent("x", "y"));
    CHECK(i.edge_count() == 1);
}

TEST_CASE("De Morgan holds for every triple of labelled graphs sampled at n = 6")
{
    std::mt19937 rng(11);
    for (int trial = 0 ; trial < 50 ; ++trial) {
        vector<Graph> gs, cs;
        for (int k = 0 ; k < 3 ; ++k) {
            auto g = bridge::to_graph(oracle::random_graph(6, 0.5, rng));
            gs.push_back(g);
            cs.push_back(complement(g));
        }
        auto left = complement(graph_intersection(gs));
        auto right = graph_union(cs);
        CHECK(left == right);
        auto n = 6u;
        for (std::size_t a = 0 ; a != n ; ++a)
            for (std::size_t b = a + 1 ; b != n ; ++b) {
                bool everywhere = gs[0].adjacent(a, b) && gs[1].adjacent(a, b) && gs[2].adjacent(a, b);
                CHECK(left.adjacent(a, b) == ! everywhere);
            }
    }
}

TEST_CASE("De Morgan holds exhaustively for pairs of graphs on four vertices")
{
    for (unsigned x = 0 ; x < 64 ; ++x)
        for (unsigned y = 0 ; y < 64 ; ++y) {
            oracle::SmallGraph sx, sy;
            sx.n = sy.n = 4;
            int k = 0;
            for (int a = 0 ; a < 4 ; ++a)
                for (int b = a + 1 ; b < 4 ; ++b, ++k) {
                    if ((x >> k) & 1u)
                        sx.add_edge(a, b);
                    if ((y >> k) & 1u)
                        sy.add_edge(a, b);
                }
            vector<Graph> gs{ bridge::to_graph(sx), bridge::to_graph(sy) };
            vector<Graph> cs{ complement(gs[0]), complement(gs[1]) };
            REQUIRE(complement(graph_intersection(gs)) == graph_union(cs));
            REQUIRE(complement(graph_union(gs)) == graph_intersection(cs));
        }
}

TEST_CASE("poset intersection")
{
    auto abc = chain({ "a", "b", "c" });
    vector<Poset> reversed{ abc, chain({ "c", "b", "a" }) };
    CHECK(poset_intersection(reversed).relation_count() == 0);

    vector<Poset> two{ abc, chain({ "a", "c", "b" }) };
    auto p = poset_intersection(two);
    CHECK(p.less("a", "b"));
    CHECK(p.less("a", "c"));
    CHECK(p.relation_count() == 2);

    vector<Poset> same{ abc, abc };
    CHECK(poset_intersection(same) == abc);
}

TEST_CASE("comparability graphs")
{
    CHECK(comparability_graph(chain({ "a", "b", "c" })) == complete({ "a", "b", "c" }));
    CHECK(comparability_graph(Poset({ "a", "b", "c" })).edge_count() == 0);

    auto g = comparability_graph(standard_example());
    CHECK(g.edge_count() == 6);
    for (int i = 1 ; i <= 3 ; ++i)
        for (int j = 1 ; j <= 3 ; ++j)
            CHECK(g.adjacent("a" + std::to_string(i), "b" + std::to_string(j)) == (i != j));
    CHECK(! g.adjacent("a1", "a2"));
}

TEST_CASE("poset reduction")
{
    Poset antichain({ "a", "b", "c" });
    CHECK(poset_equivalence_classes(antichain) == Partition{ { "a", "b", "c" } });
    CHECK(reduce_poset(antichain).size() == 1);
    CHECK(reduce_poset(antichain).label(0) == "a");

    auto two = chain({ "a", "b" });
    CHECK(poset_equivalence_classes(two) == Partition{ { "a" }, { "b" } });
    CHECK(reduce_poset(two) == two);

    auto vee = Poset::from_relations({ "a", "b", "c" }, { { "a", "c" }, { "b", "c" } });
    CHECK(poset_equivalence_classes(vee) == Partition{ { "a", "b" }, { "c" } });
    auto r = reduce_poset(vee);
    CHECK(r.size() == 2);
    CHECK(r.less("a", "c"));
}

TEST_CASE("reduced size agrees with a pairwise-definition oracle")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & small : oracle::all_posets(n))
            CHECK(int(reduce_poset(bridge::to_poset(small)).size()) == oracle::reduced_size(small));
}

TEST_CASE("graph reduction")
{
    Graph edgeless({ "a", "b", "c" });
    CHECK(graph_equivalence_classes(edgeless, ReductionMode::multiplication) == Partition{ { "a", "b", "c" } });
    CHECK(reduce_graph(edgeless, ReductionMode::multiplication).size() == 1);

    auto k3 = complete({ "a", "b", "c" });
    CHECK(graph_equivalence_classes(k3, ReductionMode::expansion) == Partition{ { "a", "b", "c" } });
    CHECK(reduce_graph(k3, ReductionMode::expansion).size() == 1);

    auto c4 = cycle({ "a", "b", "c", "d" });
    CHECK(graph_equivalence_classes(c4, ReductionMode::multiplication) == Partition{ { "a", "c" }, { "b", "d" } });
    auto r = reduce_graph(c4, ReductionMode::multiplication);
    CHECK(r.size() == 2);
    CHECK(r.adjacent("a", "b"));
}

TEST_CASE("expansion reduction is multiplication reduction of the complement")
{
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & small : oracle::all_graphs(n)) {
            auto g = bridge::to_graph(small);
            CHECK(graph_equivalence_classes(g, ReductionMode::expansion)
                    == graph_equivalence_classes(complement(g), ReductionMode::multiplication));
            CHECK(reduce_graph(g, ReductionMode::expansion)
                    == complement(reduce_graph(complement(g), ReductionMode::multiplication)));
        }
}

TEST_CASE("multiplication")
{
    Poset k1({ "a" });
    auto three = multiply(k1, { { "a", 3 } });
    CHECK(three.size() == 3);
    CHECK(three.relation_count() == 0);
    CHECK(three.labels().names() == vector<string>{ "a#1", "a#2", "a#3" });
    CHECK(multiply(Graph({ "a" }), { { "a", 3 } }).edge_count() == 0);

    auto two = chain({ "a", "b" });
    auto m = multiply(two, { { "a", 2 }, { "b", 1 } });
    CHECK(m.size() == 3);
    CHECK(m.less("a#1", "b"));
    CHECK(m.less("a#2", "b"));
    CHECK(! m.comparable(m.index_of("a#1"), m.index_of("a#2")));

    CHECK(multiply(two, { { "a", 1 }, { "b", 1 } }) == two);
    CHECK(multiply(two, { }) == two);
    CHECK_THROWS_AS(multiply(two, { { "a", 0 } }), InvalidCount);
    CHECK_THROWS_AS(multiply(two, { { "z", 2 } }), UnknownVertex);
    CHECK_THROWS(multiply(Poset({ "a", "a#1" }), { { "a", 2 } }));
}

TEST_CASE("multiplying a graph keeps copies non-adjacent with equal neighbourhoods")
{
    auto p3 = path({ "a", "b", "c" });
    auto m = multiply(p3, { { "b", 2 } });
    CHECK(m.size() == 4);
    CHECK(! m.adjacent("b#1", "b#2"));
    CHECK(m.adjacent("a", "b#1"));
    CHECK(m.adjacent("a", "b#2"));
    CHECK(m.adjacent("c", "b#2"));
    CHECK(reduce_graph(m, ReductionMode::multiplication).size() == 2);
}
