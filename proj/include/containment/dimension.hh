/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_DIMENSION_HH
#define CONTAINMENT_DIMENSION_HH

#include <containment/graph.hh>
#include <containment/poset.hh>

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace containment
{
    /// Labels from bottom (rank 1) to top.
    struct LinearOrder
    {
        std::vector<std::string> labels;

        auto operator== (const LinearOrder &) const -> bool = default;
    };

    struct Realizer
    {
        std::vector<LinearOrder> orders;

        auto operator== (const Realizer &) const -> bool = default;
    };

    struct DimensionResult
    {
        unsigned dimension;
        Realizer witness;
    };

    inline constexpr std::size_t default_extension_cap = 20000;
    inline constexpr unsigned unlimited_budget = std::numeric_limits<unsigned>::max();

    /// Every linear extension in lexicographic order of declaration index.
    /// Throws CapExceeded when there are more than cap.
    auto linear_extensions(const Poset & p, std::size_t cap = default_extension_cap) -> std::vector<LinearOrder>;

    /// Every order must be a permutation of p's labels (LabelMismatch).
    auto verify_realizer(const Poset & p, const Realizer & r) -> bool;

    /**
     * Minimum realizer. Chains return their unique extension; otherwise the
     * two-dimensional test is tried first and returns its constructed
     * 2-realizer, and only posets of dimension at least 3 go to the exact
     * search. Throws EmptyInput, BudgetExceeded and CapExceeded.
     */
    auto dimension(const Poset & p, unsigned budget = unlimited_budget,
            std::size_t extension_cap = default_extension_cap) -> DimensionResult;

    /**
     * Minimum realizer by exact search alone: all linear extensions are
     * enumerated and a smallest family covering every ordered incomparable
     * pair is found by branching with a greedy upper bound. The witness is
     * the lexicographically first minimum family in enumeration order.
     */
    auto exact_dimension(const Poset & p, unsigned budget = unlimited_budget,
            std::size_t extension_cap = default_extension_cap) -> DimensionResult;

    /**
     * A 2-realizer built from a transitive orientation Q of the
     * incomparability graph: L1 is P together with Q, L2 is P together with Q
     * reversed. Empty if the incomparability graph is not transitively
     * orientable.
     */
    auto two_realizer(const Poset & p) -> std::optional<Realizer>;

    auto is_two_dimensional(const Poset & p) -> bool;

    /// Dimension of any transitive orientation. Throws NotComparability.
    auto graph_dimension(const Graph & g, unsigned budget = unlimited_budget) -> unsigned;

    /// ceil(n / 2).
    auto hiraguchi_bound(std::size_t n) -> unsigned;

    /// Least d with g a containment graph of boxes in d-space: ceil(dim / 2).
    auto box_dimension(const Graph & g, unsigned budget = unlimited_budget) -> unsigned;
}

#endif
