/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_COMPARABILITY_HH
#define CONTAINMENT_COMPARABILITY_HH

#include <containment/errors.hh>
#include <containment/graph.hh>
#include <containment/orientation.hh>
#include <containment/poset.hh>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace containment
{
    /**
     * Arcs forced equal by the forcing relation: a -> b forces a -> b' when
     * b b' is a non-edge, and forces a' -> b when a a' is a non-edge.
     */
    struct ImplicationClass
    {
        /// Sorted by index.
        std::vector<std::pair<std::size_t, std::size_t>> arcs;

        /// True if the class holds some arc together with its reverse.
        auto self_reversing() const -> bool;
    };

    /// Implication classes of g, one per class, in order of their least arc by label.
    auto implication_classes(const Graph & g) -> std::vector<ImplicationClass>;

    /**
     * Transitive orientation by repeated implication-class decomposition: the
     * lexicographically least remaining edge {u, v} (by label, u < v) is
     * oriented v -> u, its class in the remaining graph is forced and removed,
     * and the process repeats. Throws NotComparability carrying a certificate.
     */
    auto transitive_orient(const Graph & g) -> Orientation;

    /// As transitive_orient, without building a certificate on failure.
    auto try_transitive_orient(const Graph & g) -> std::optional<Orientation>;

    auto is_comparability(const Graph & g) -> bool;

    /// Calls visit on every transitive orientation until it returns false.
    auto enumerate_transitive_orientations(const Graph & g,
            const std::function<auto (const Orientation &) -> bool> & visit) -> void;

    /// Complete list; throws CapExceeded if there are more than cap.
    auto all_transitive_orientations(const Graph & g, std::size_t cap) -> std::vector<Orientation>;

    /// x -> y becomes y < x. Throws NotTransitive.
    auto orientation_to_poset(const Orientation & o) -> Poset;

    /// Inverse of orientation_to_poset: the comparability graph with x -> y for y < x.
    auto poset_to_orientation(const Poset & p) -> Orientation;

    /**
     * Coherent transitive orientations of a nested sequence G1 <= ... <= Gm:
     * the last graph is oriented and every earlier graph receives the
     * restriction. Throws NotNested or NotComparability.
     */
    auto coherent_orient(std::span<const Graph> sequence) -> std::vector<Orientation>;

    /// Throws IsComparability if g is transitively orientable.
    auto find_odd_cycle_certificate(const Graph & g) -> OddCycleCertificate;

    /// Odd length, consecutive vertices adjacent, no v_i v_{i+2} edge (cyclically).
    auto validate_certificate(const Graph & g, const OddCycleCertificate & certificate) -> bool;
}

#endif
