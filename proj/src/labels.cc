/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/labels.hh>
#include <containment/errors.hh>

#include <algorithm>
#include <cctype>
#include <utility>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace containment
{
    auto valid_label(const string & name) -> bool
    {
        return ! name.empty() && std::none_of(name.begin(), name.end(),
                [] (unsigned char c) { return std::isspace(c) || c == 0; });
    }

    LabelIndex::LabelIndex(vector<string> names) :
        _names(std::move(names))
    {
        _index.reserve(_names.size());
        for (size_t v = 0 ; v != _names.size() ; ++v) {
            if (! valid_label(_names[v]))
                throw InvariantViolation("invalid vertex label '" + _names[v] + "'");
            if (! _index.emplace(_names[v], v).second)
                throw InvariantViolation("duplicate vertex label '" + _names[v] + "'");
        }
    }

    auto LabelIndex::index_of(const string & name) const -> size_t
    {
        auto i = _index.find(name);
        if (i == _index.end())
            throw UnknownVertex(name);
        return i->second;
    }

    auto LabelIndex::find(const string & name) const -> optional<size_t>
    {
        auto i = _index.find(name);
        if (i == _index.end())
            return std::nullopt;
        return i->second;
    }

    auto LabelIndex::same_set(const LabelIndex & other) const -> bool
    {
        if (size() != other.size())
            return false;
        return std::all_of(_names.begin(), _names.end(), [&] (const string & n) { return other.contains(n); });
    }
}
