/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/graph.hh>
#include <containment/errors.hh>

#include <algorithm>
#include <utility>

using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace containment
{
    Graph::Graph(vector<string> labels) :
        _labels(std::move(labels)),
        _adjacency(_labels.size(), Bits(_labels.size()))
    {
    }

    auto Graph::from_edges(vector<string> labels, const vector<pair<string, string>> & edges) -> Graph
    {
        Graph result(std::move(labels));
        for (auto & [a, b] : edges)
            result.add_edge(result.index_of(a), result.index_of(b));
        return result;
    }

    auto Graph::adjacent(const string & a, const string & b) const -> bool
    {
        return adjacent(index_of(a), index_of(b));
    }

    auto Graph::add_edge(size_t a, size_t b) -> void
    {
        if (a == b)
            throw InvariantViolation("self-loop on vertex '" + label(a) + "'");
        _adjacency[a].set(b);
        _adjacency[b].set(a);
    }

    auto Graph::remove_edge(size_t a, size_t b) -> void
    {
        _adjacency[a].reset(b);
        _adjacency[b].reset(a);
    }

    auto Graph::edge_count() const -> size_t
    {
        size_t twice = 0;
        for (auto & row : _adjacency)
            twice += row.count();
        return twice / 2;
    }

    auto Graph::edges() const -> vector<pair<size_t, size_t>>
    {
        vector<pair<size_t, size_t>> result;
        for (size_t a = 0 ; a != size() ; ++a)
            for (auto b = _adjacency[a].find_next(a) ; b != Bits::npos ; b = _adjacency[a].find_next(b))
                result.emplace_back(a, b);
        return result;
    }

    auto Graph::edges_by_label() const -> vector<pair<size_t, size_t>>
    {
        auto result = edges();
        for (auto & [a, b] : result)
            if (label(b) < label(a))
                std::swap(a, b);
        std::sort(result.begin(), result.end(), [&] (const auto & x, const auto & y) {
                if (label(x.first) != label(y.first))
                    return label(x.first) < label(y.first);
                return label(x.second) < label(y.second);
                });
        return result;
    }
}
