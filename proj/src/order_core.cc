/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/order_core.hh>
#include <containment/errors.hh>

#include <algorithm>
#include <set>

using std::map;
using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace
{
    using namespace containment;

    auto keep_indices(const LabelIndex & labels, const vector<string> & keep) -> vector<size_t>
    {
        std::set<size_t> chosen;
        for (auto & k : keep)
            chosen.insert(labels.index_of(k));
        return { chosen.begin(), chosen.end() };
    }

    // Index of every vertex of `from` in `to`, which must carry the same label set.
    auto label_map(const LabelIndex & to, const LabelIndex & from) -> vector<size_t>
    {
        if (! to.same_set(from))
            throw LabelMismatch("structures do not share the same vertex labels");
        vector<size_t> result(from.size());
        for (size_t v = 0 ; v != from.size() ; ++v)
            result[v] = to.index_of(from.name(v));
        return result;
    }

    template <typename Combine_>
    auto combine_graphs(span<const Graph> graphs, Combine_ && combine) -> Graph
    {
        if (graphs.empty())
            throw InvariantViolation("graph list must be nonempty");
        auto result = graphs.front();
        for (auto & g : graphs.subspan(1)) {
            auto map = label_map(result.labels(), g.labels());
            for (size_t a = 0 ; a != g.size() ; ++a)
                for (size_t b = a + 1 ; b != g.size() ; ++b) {
                    bool keep = combine(result.adjacent(map[a], map[b]), g.adjacent(a, b));
                    if (keep)
                        result.add_edge(map[a], map[b]);
                    else
                        result.remove_edge(map[a], map[b]);
                }
        }
        return result;
    }

    // Groups indices into classes of a caller-supplied equivalence, classes and
    // members sorted by label.
    template <typename Equivalent_>
    auto partition_by(const LabelIndex & labels, Equivalent_ && equivalent) -> Partition
    {
        auto n = labels.size();
        vector<size_t> order(n);
        for (size_t v = 0 ; v != n ; ++v)
            order[v] = v;
        std::sort(order.begin(), order.end(), [&] (size_t a, size_t b) { return labels.name(a) < labels.name(b); });

        vector<bool> placed(n, false);
        Partition result;
        for (size_t i = 0 ; i != n ; ++i) {
            auto v = order[i];
            if (placed[v])
                continue;
            placed[v] = true;
            vector<string> group{ labels.name(v) };
            for (size_t j = i + 1 ; j != n ; ++j) {
                auto w = order[j];
                if (! placed[w] && equivalent(v, w)) {
                    placed[w] = true;
                    group.push_back(labels.name(w));
                }
            }
            result.push_back(std::move(group));
        }
        return result;
    }

    auto representatives(const Partition & classes) -> vector<string>
    {
        vector<string> result;
        for (auto & c : classes)
            result.push_back(c.front());
        return result;
    }

    auto copy_names(const LabelIndex & labels, const map<string, unsigned> & counts) -> vector<vector<string>>
    {
        for (auto & [name, count] : counts) {
            labels.index_of(name);
            if (count < 1)
                throw InvalidCount("count for '" + name + "' must be at least 1");
        }

        vector<vector<string>> result(labels.size());
        std::set<string> used(labels.names().begin(), labels.names().end());
        for (size_t v = 0 ; v != labels.size() ; ++v) {
            auto c = counts.find(labels.name(v));
            unsigned count = c == counts.end() ? 1 : c->second;
            if (count == 1) {
                result[v].push_back(labels.name(v));
                continue;
            }
            used.erase(labels.name(v));
            for (unsigned k = 1 ; k <= count ; ++k) {
                auto name = labels.name(v) + "#" + std::to_string(k);
                if (! used.insert(name).second)
                    throw InvariantViolation("copy label '" + name + "' collides with an existing label");
                result[v].push_back(std::move(name));
            }
        }
        return result;
    }
}

namespace containment
{
    auto complement(const Graph & g) -> Graph
    {
        Graph result(g.labels().names());
        for (size_t a = 0 ; a != g.size() ; ++a)
            for (size_t b = a + 1 ; b != g.size() ; ++b)
                if (! g.adjacent(a, b))
                    result.add_edge(a, b);
        return result;
    }

    auto induced(const Graph & g, const vector<string> & keep) -> Graph
    {
        auto chosen = keep_indices(g.labels(), keep);
        vector<string> names;
        for (auto v : chosen)
            names.push_back(g.label(v));
        Graph result(std::move(names));
        for (size_t a = 0 ; a != chosen.size() ; ++a)
            for (size_t b = a + 1 ; b != chosen.size() ; ++b)
                if (g.adjacent(chosen[a], chosen[b]))
                    result.add_edge(a, b);
        return result;
    }

    auto induced(const Poset & p, const vector<string> & keep) -> Poset
    {
        auto chosen = keep_indices(p.labels(), keep);
        vector<string> names;
        for (auto v : chosen)
            names.push_back(p.label(v));
        vector<Bits> matrix(chosen.size(), Bits(chosen.size()));
        for (size_t a = 0 ; a != chosen.size() ; ++a)
            for (size_t b = 0 ; b != chosen.size() ; ++b)
                if (p.less(chosen[a], chosen[b]))
                    matrix[a].set(b);
        return Poset::from_matrix(std::move(names), std::move(matrix));
    }

    auto graph_intersection(span<const Graph> graphs) -> Graph
    {
        return combine_graphs(graphs, [] (bool a, bool b) { return a && b; });
    }

    auto graph_union(span<const Graph> graphs) -> Graph
    {
        return combine_graphs(graphs, [] (bool a, bool b) { return a || b; });
    }

    auto poset_intersection(span<const Poset> posets) -> Poset
    {
        if (posets.empty())
            throw InvariantViolation("poset list must be nonempty");
        auto & first = posets.front();
        auto n = first.size();
        vector<Bits> matrix(n);
        for (size_t x = 0 ; x != n ; ++x)
            matrix[x] = first.above(x);

        for (auto & p : posets.subspan(1)) {
            auto map = label_map(first.labels(), p.labels());
            vector<Bits> mapped(n, Bits(n));
            for (size_t x = 0 ; x != n ; ++x)
                for (auto y = p.above(x).find_first() ; y != Bits::npos ; y = p.above(x).find_next(y))
                    mapped[map[x]].set(map[y]);
            for (size_t x = 0 ; x != n ; ++x)
                matrix[x] &= mapped[x];
        }
        return Poset::from_matrix(first.labels().names(), std::move(matrix));
    }

    auto comparability_graph(const Poset & p) -> Graph
    {
        Graph result(p.labels().names());
        for (size_t x = 0 ; x != p.size() ; ++x)
            for (auto y = p.above(x).find_first() ; y != Bits::npos ; y = p.above(x).find_next(y))
                result.add_edge(x, y);
        return result;
    }

    auto poset_equivalence_classes(const Poset & p) -> Partition
    {
        return partition_by(p.labels(), [&] (size_t x, size_t y) {
                return ! p.comparable(x, y) && p.above(x) == p.above(y) && p.below(x) == p.below(y);
                });
    }

    auto reduce_poset(const Poset & p) -> Poset
    {
        return induced(p, representatives(poset_equivalence_classes(p)));
    }

    auto graph_equivalence_classes(const Graph & g, ReductionMode mode) -> Partition
    {
        return partition_by(g.labels(), [&] (size_t v, size_t w) {
                bool want_adjacent = mode == ReductionMode::expansion;
                if (g.adjacent(v, w) != want_adjacent)
                    return false;
                auto nv = g.neighbourhood(v), nw = g.neighbourhood(w);
                nv.reset(w);
                nw.reset(v);
                return nv == nw;
                });
    }

    auto reduce_graph(const Graph & g, ReductionMode mode) -> Graph
    {
        return induced(g, representatives(graph_equivalence_classes(g, mode)));
    }

    auto multiply(const Poset & p, const map<string, unsigned> & counts) -> Poset
    {
        auto copies = copy_names(p.labels(), counts);
        vector<string> names;
        vector<size_t> origin;
        for (size_t v = 0 ; v != p.size() ; ++v)
            for (auto & c : copies[v]) {
                names.push_back(c);
                origin.push_back(v);
            }

        auto m = names.size();
        vector<Bits> matrix(m, Bits(m));
        for (size_t a = 0 ; a != m ; ++a)
            for (size_t b = 0 ; b != m ; ++b)
                if (p.less(origin[a], origin[b]))
                    matrix[a].set(b);
        return Poset::from_matrix(std::move(names), std::move(matrix));
    }

    auto multiply(const Graph & g, const map<string, unsigned> & counts) -> Graph
    {
        auto copies = copy_names(g.labels(), counts);
        vector<string> names;
        vector<size_t> origin;
        for (size_t v = 0 ; v != g.size() ; ++v)
            for (auto & c : copies[v]) {
                names.push_back(c);
                origin.push_back(v);
            }

        Graph result(std::move(names));
        for (size_t a = 0 ; a != result.size() ; ++a)
            for (size_t b = a + 1 ; b != result.size() ; ++b)
                if (g.adjacent(origin[a], origin[b]))
                    result.add_edge(a, b);
        return result;
    }

    auto transitive_closure_build(vector<string> labels, const vector<pair<string, string>> & less_than) -> Poset
    {
        return Poset::from_relations(std::move(labels), less_than);
    }
}
