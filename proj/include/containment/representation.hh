/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_REPRESENTATION_HH
#define CONTAINMENT_REPRESENTATION_HH

#include <containment/dimension.hh>
#include <containment/graph.hh>
#include <containment/labels.hh>
#include <containment/orientation.hh>
#include <containment/poset.hh>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace containment
{
    using Atom = std::int64_t;

    /// Sorted, duplicate-free.
    using AtomSet = std::vector<Atom>;

    /**
     * A set of integer atoms for every labelled vertex. Sets must be nonempty;
     * injective() reports whether all sets are pairwise distinct.
     */
    class SetFamily
    {
        public:
            SetFamily() = default;

            /// Sets are sorted and deduplicated. Throws InvariantViolation on an
            /// empty set, or on repeated sets when require_injective is set.
            SetFamily(std::vector<std::string> labels, std::vector<AtomSet> sets, bool require_injective = false);

            auto size() const -> std::size_t { return _labels.size(); }
            auto labels() const -> const LabelIndex & { return _labels; }
            auto label(std::size_t v) const -> const std::string & { return _labels.name(v); }
            auto set(std::size_t v) const -> const AtomSet & { return _sets[v]; }
            auto sets() const -> const std::vector<AtomSet> & { return _sets; }
            auto injective() const -> bool { return _injective; }

            /// Largest atom used, or -1 for an empty family.
            auto max_atom() const -> Atom;

            auto operator== (const SetFamily & other) const -> bool = default;

        private:
            LabelIndex _labels;
            std::vector<AtomSet> _sets;
            bool _injective = true;
    };

    /// Closed integer interval, left < right.
    struct Interval
    {
        std::int64_t left, right;

        auto operator== (const Interval &) const -> bool = default;
    };

    /// One interval per vertex; all left endpoints distinct, all right endpoints distinct.
    class IntervalRep
    {
        public:
            IntervalRep() = default;

            /// Throws InvariantViolation.
            IntervalRep(std::vector<std::string> labels, std::vector<Interval> intervals);

            auto size() const -> std::size_t { return _labels.size(); }
            auto labels() const -> const LabelIndex & { return _labels; }
            auto label(std::size_t v) const -> const std::string & { return _labels.name(v); }
            auto interval(std::size_t v) const -> const Interval & { return _intervals[v]; }

            auto operator== (const IntervalRep & other) const -> bool = default;

        private:
            LabelIndex _labels;
            std::vector<Interval> _intervals;
    };

    /// Iso-oriented box per vertex: d intervals, endpoints distinct per axis and side.
    class BoxRep
    {
        public:
            BoxRep() = default;

            /// Throws MalformedBox (InvalidD when d is zero).
            BoxRep(std::vector<std::string> labels, std::size_t d, std::vector<std::vector<Interval>> boxes);

            auto size() const -> std::size_t { return _labels.size(); }
            auto dimensions() const -> std::size_t { return _d; }
            auto labels() const -> const LabelIndex & { return _labels; }
            auto label(std::size_t v) const -> const std::string & { return _labels.name(v); }
            auto box(std::size_t v) const -> const std::vector<Interval> & { return _boxes[v]; }

            auto operator== (const BoxRep & other) const -> bool = default;

        private:
            LabelIndex _labels;
            std::size_t _d = 1;
            std::vector<std::vector<Interval>> _boxes;
    };

    /**
     * Subtrees of a star with center 0 and leaves 1..n: vertex k (1-based
     * declaration index) gets {0} together with its leaf set, which must
     * contain k.
     */
    class StarSubtreeRep
    {
        public:
            StarSubtreeRep() = default;

            /// Throws InvariantViolation.
            StarSubtreeRep(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> leaves);

            auto size() const -> std::size_t { return _labels.size(); }
            auto labels() const -> const LabelIndex & { return _labels; }
            auto label(std::size_t v) const -> const std::string & { return _labels.name(v); }
            auto leaves(std::size_t v) const -> const std::vector<std::size_t> & { return _leaves[v]; }

            /// The subtrees as atom sets, center included.
            auto as_family() const -> SetFamily;

            auto operator== (const StarSubtreeRep & other) const -> bool = default;

        private:
            LabelIndex _labels;
            std::vector<std::vector<std::size_t>> _leaves;
    };

    /// Points in 2d-space produced from a box representation, plus the offset m used.
    struct Embedding
    {
        std::vector<std::string> labels;
        std::vector<std::vector<std::int64_t>> points;
        std::int64_t offset;
    };

    /// S_k = { i : x_i <= x_k }, indices 1-based.
    auto downset_representation(const Poset & p) -> SetFamily;

    /// T_j = {0, j} together with every i where i -> j. Throws NotTransitive.
    auto star_subtree_representation(const Orientation & o) -> StarSubtreeRep;

    /// T_j = {0, j} together with every i below j.
    auto star_subtree_representation(const Poset & p) -> StarSubtreeRep;

    /// From a 2-realizer (L1, L2): x gets [n - rank1(x), n + rank2(x)], ranks from 1.
    auto intervals_from_realizer(const Poset & p, const LinearOrder & first, const LinearOrder & second)
        -> IntervalRep;

    /// Throws DimensionTooHigh when the poset is not two-dimensional.
    auto interval_representation(const Poset & p) -> IntervalRep;

    /// Axis k built from realizer members 2k-1 and 2k; the realizer is padded
    /// with its last member up to 2d. Throws InvalidD and DimensionTooHigh.
    auto box_representation(const Poset & p, std::size_t d) -> BoxRep;

    /// Box [a1,b1] x ... x [ad,bd] goes to (a1, m - b1, ..., ad, m - bd) with
    /// m one above the largest right endpoint. A box is strictly inside another
    /// exactly when its point strictly dominates the other's in every coordinate.
    auto boxes_to_embedding(const BoxRep & boxes) -> Embedding;

    /// x < y iff x's point strictly dominates y's in every coordinate, which is
    /// the containment order of the boxes an embedding came from.
    auto embedding_order(const Embedding & e) -> Poset;

    /// Containment poset of `copies` copies of every set, copy a of set v named "v#a".
    auto composition_poset(const SetFamily & family, unsigned copies) -> Poset;

    /// T_i = S_i plus a fresh atom unique to i, allocated above the largest atom.
    auto overlap_from_intersection(const SetFamily & family) -> SetFamily;

    /// G is a disjointedness graph of a family iff its complement is an intersection graph of it.
    auto disjointedness_complement(const Graph & g) -> Graph;
}

#endif
