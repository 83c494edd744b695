/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_POSET_HH
#define CONTAINMENT_POSET_HH

#include <containment/labels.hh>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace containment
{
    /**
     * Strict partial order over labelled elements. The relation matrix is
     * always stored transitively closed; every constructor closes the input and
     * rejects cycles with CycleDetected.
     */
    class Poset
    {
        public:
            Poset() = default;

            /// Antichain on the given labels.
            explicit Poset(std::vector<std::string> labels);

            /// Transitive closure of the given x < y pairs.
            static auto from_relations(std::vector<std::string> labels,
                    const std::vector<std::pair<std::string, std::string>> & less_than) -> Poset;

            /// Transitive closure of a relation matrix, row x holding every y with x < y.
            static auto from_matrix(std::vector<std::string> labels, std::vector<Bits> less_than) -> Poset;

            auto size() const -> std::size_t { return _labels.size(); }
            auto labels() const -> const LabelIndex & { return _labels; }
            auto label(std::size_t v) const -> const std::string & { return _labels.name(v); }
            auto index_of(const std::string & name) const -> std::size_t { return _labels.index_of(name); }

            auto less(std::size_t x, std::size_t y) const -> bool { return _above[x].test(y); }
            auto less(const std::string & x, const std::string & y) const -> bool;
            auto comparable(std::size_t x, std::size_t y) const -> bool { return less(x, y) || less(y, x); }

            /// Elements strictly above / below v.
            auto above(std::size_t v) const -> const Bits & { return _above[v]; }
            auto below(std::size_t v) const -> const Bits & { return _below[v]; }

            auto relation_count() const -> std::size_t;

            /// Pairs (x, y) with x covered by y, sorted by index.
            auto covers() const -> std::vector<std::pair<std::size_t, std::size_t>>;

            auto is_chain() const -> bool;

            auto operator== (const Poset & other) const -> bool = default;

        private:
            LabelIndex _labels;
            std::vector<Bits> _above, _below;
    };
}

#endif
