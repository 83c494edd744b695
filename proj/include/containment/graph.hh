/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_GRAPH_HH
#define CONTAINMENT_GRAPH_HH

#include <containment/labels.hh>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace containment
{
    /**
     * Undirected simple graph on labelled vertices, adjacency stored as one bit
     * row per vertex. Rows are kept symmetric and the diagonal is always clear.
     */
    class Graph
    {
        public:
            Graph() = default;

            /// Edgeless graph on the given labels.
            explicit Graph(std::vector<std::string> labels);

            static auto from_edges(std::vector<std::string> labels,
                    const std::vector<std::pair<std::string, std::string>> & edges) -> Graph;

            auto size() const -> std::size_t { return _labels.size(); }
            auto labels() const -> const LabelIndex & { return _labels; }
            auto label(std::size_t v) const -> const std::string & { return _labels.name(v); }
            auto index_of(const std::string & name) const -> std::size_t { return _labels.index_of(name); }

            auto adjacent(std::size_t a, std::size_t b) const -> bool { return _adjacency[a].test(b); }
            auto adjacent(const std::string & a, const std::string & b) const -> bool;
            auto neighbourhood(std::size_t v) const -> const Bits & { return _adjacency[v]; }
            auto degree(std::size_t v) const -> std::size_t { return _adjacency[v].count(); }

            /// Throws InvariantViolation on a self-loop.
            auto add_edge(std::size_t a, std::size_t b) -> void;
            auto remove_edge(std::size_t a, std::size_t b) -> void;

            auto edge_count() const -> std::size_t;

            /// Every edge once as (a, b) with a < b by index, sorted.
            auto edges() const -> std::vector<std::pair<std::size_t, std::size_t>>;

            /// Every edge once as (a, b) with label(a) < label(b), sorted by label pair.
            auto edges_by_label() const -> std::vector<std::pair<std::size_t, std::size_t>>;

            auto operator== (const Graph & other) const -> bool = default;

        private:
            LabelIndex _labels;
            std::vector<Bits> _adjacency;
    };
}

#endif
