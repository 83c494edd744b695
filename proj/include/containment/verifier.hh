/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_VERIFIER_HH
#define CONTAINMENT_VERIFIER_HH

#include <containment/graph.hh>
#include <containment/poset.hh>
#include <containment/representation.hh>

#include <string>
#include <vector>

namespace containment
{
    /// One mismatching vertex pair. first precedes second in the structure's declaration order.
    struct Violation
    {
        std::string first, second;
        std::string expected, observed;

        auto operator== (const Violation &) const -> bool = default;
    };

    struct Verdict
    {
        bool ok = true;
        std::vector<Violation> violations;
    };

    // Containment: edges (or x < y) must match proper inclusion exactly.
    // Every overload throws MissingVertex when the representation lacks a label.
    auto verify_containment_graph(const Graph & g, const SetFamily & f) -> Verdict;
    auto verify_containment_graph(const Graph & g, const IntervalRep & f) -> Verdict;
    auto verify_containment_graph(const Graph & g, const BoxRep & f) -> Verdict;
    auto verify_containment_graph(const Graph & g, const StarSubtreeRep & f) -> Verdict;

    auto verify_containment_poset(const Poset & p, const SetFamily & f) -> Verdict;
    auto verify_containment_poset(const Poset & p, const IntervalRep & f) -> Verdict;
    auto verify_containment_poset(const Poset & p, const BoxRep & f) -> Verdict;
    auto verify_containment_poset(const Poset & p, const StarSubtreeRep & f) -> Verdict;

    /// v ~ w iff f(v) and f(w) meet.
    auto verify_intersection(const Graph & g, const SetFamily & f) -> Verdict;

    /// v ~ w iff f(v) and f(w) meet and neither includes the other.
    auto verify_overlap(const Graph & g, const SetFamily & f) -> Verdict;

    /// v ~ w iff f(v) and f(w) are disjoint.
    auto verify_disjointedness(const Graph & g, const SetFamily & f) -> Verdict;

    struct InjectivityReport
    {
        bool injective = true;

        /// Groups of labels sharing one set, each group in declaration order.
        std::vector<std::vector<std::string>> duplicates;
    };

    auto injectivity_audit(const SetFamily & f) -> InjectivityReport;
    auto injectivity_audit(const IntervalRep & f) -> InjectivityReport;
    auto injectivity_audit(const BoxRep & f) -> InjectivityReport;
    auto injectivity_audit(const StarSubtreeRep & f) -> InjectivityReport;

    /// x < y iff f(x) is a proper subset of f(y).
    auto derive_containment_order(const SetFamily & f) -> Poset;
}

#endif
