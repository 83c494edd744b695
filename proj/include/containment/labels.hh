/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_LABELS_HH
#define CONTAINMENT_LABELS_HH

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace containment
{
    using Bits = boost::dynamic_bitset<>;

    /**
     * Ordered, duplicate-free list of vertex names. Declaration order fixes the
     * vertex index; every multi-input operation matches vertices by name.
     */
    class LabelIndex
    {
        public:
            LabelIndex() = default;
            explicit LabelIndex(std::vector<std::string> names);

            auto size() const -> std::size_t { return _names.size(); }
            auto names() const -> const std::vector<std::string> & { return _names; }
            auto name(std::size_t v) const -> const std::string & { return _names[v]; }

            /// Throws UnknownVertex.
            auto index_of(const std::string & name) const -> std::size_t;
            auto find(const std::string & name) const -> std::optional<std::size_t>;
            auto contains(const std::string & name) const -> bool { return _index.contains(name); }

            /// True if both hold exactly the same names, in any order.
            auto same_set(const LabelIndex & other) const -> bool;

            auto operator== (const LabelIndex & other) const -> bool { return _names == other._names; }

        private:
            std::vector<std::string> _names;
            std::unordered_map<std::string, std::size_t> _index;
    };

    /// Labels must be non-empty and whitespace-free.
    auto valid_label(const std::string & name) -> bool;
}

#endif
