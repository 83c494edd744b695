/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_ORIENTATION_HH
#define CONTAINMENT_ORIENTATION_HH

#include <containment/graph.hh>

#include <cstddef>
#include <utility>
#include <vector>

namespace containment
{
    /**
     * Assignment of a direction to every edge of a graph. An arc x -> y is read
     * as x > y when the orientation is turned into a poset.
     */
    class Orientation
    {
        public:
            Orientation() = default;

            /// Row x of out holds every y with x -> y. Each edge must appear in
            /// exactly one direction and non-edges not at all (InvariantViolation).
            Orientation(Graph base, std::vector<Bits> out);

            static auto from_arcs(Graph base, const std::vector<std::pair<std::size_t, std::size_t>> & arcs)
                -> Orientation;

            auto base() const -> const Graph & { return _base; }
            auto size() const -> std::size_t { return _base.size(); }

            auto points(std::size_t from, std::size_t to) const -> bool { return _out[from].test(to); }
            auto out(std::size_t v) const -> const Bits & { return _out[v]; }

            /// All arcs (from, to), sorted by index.
            auto arcs() const -> std::vector<std::pair<std::size_t, std::size_t>>;

            /// x -> y and y -> z imply x -> z.
            auto is_transitive() const -> bool;

            auto reversed() const -> Orientation;

            /// Orientation of an induced subgraph, matched by label. Throws
            /// NotNested if sub is not an induced subgraph of the base.
            auto restrict_to(const Graph & sub) const -> Orientation;

            auto operator== (const Orientation & other) const -> bool = default;

        private:
            Graph _base;
            std::vector<Bits> _out;
    };
}

#endif
