/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_ORDER_CORE_HH
#define CONTAINMENT_ORDER_CORE_HH

#include <containment/graph.hh>
#include <containment/poset.hh>

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace containment
{
    /// Equivalence classes, each sorted by label, classes ordered by their least label.
    using Partition = std::vector<std::vector<std::string>>;

    /// Vertex multiplication (non-adjacent twins) or vertex expansion (adjacent twins).
    enum class ReductionMode
    {
        multiplication,
        expansion
    };

    auto complement(const Graph & g) -> Graph;

    /// Substructure on the named vertices, kept in their original declaration order.
    auto induced(const Graph & g, const std::vector<std::string> & keep) -> Graph;
    auto induced(const Poset & p, const std::vector<std::string> & keep) -> Poset;

    /// All inputs must carry the same label set (LabelMismatch); the result uses
    /// the first input's declaration order.
    auto graph_intersection(std::span<const Graph> graphs) -> Graph;
    auto graph_union(std::span<const Graph> graphs) -> Graph;
    auto poset_intersection(std::span<const Poset> posets) -> Poset;

    auto comparability_graph(const Poset & p) -> Graph;

    auto poset_equivalence_classes(const Poset & p) -> Partition;

    /// r(P): the induced subposet on the least label of every class.
    auto reduce_poset(const Poset & p) -> Poset;

    auto graph_equivalence_classes(const Graph & g, ReductionMode mode) -> Partition;

    /// rho(G) for multiplication, rho'(G) for expansion.
    auto reduce_graph(const Graph & g, ReductionMode mode) -> Graph;

    /// Replaces every vertex v by counts[v] pairwise unrelated copies named
    /// "v#1", "v#2", ...; vertices with count 1 (or absent from counts) keep
    /// their label. Throws InvalidCount for a zero count and UnknownVertex for
    /// a label not in the structure.
    auto multiply(const Poset & p, const std::map<std::string, unsigned> & counts) -> Poset;
    auto multiply(const Graph & g, const std::map<std::string, unsigned> & counts) -> Graph;

    /// Transitive closure of x < y pairs; throws CycleDetected with a witness.
    auto transitive_closure_build(std::vector<std::string> labels,
            const std::vector<std::pair<std::string, std::string>> & less_than) -> Poset;
}

#endif
