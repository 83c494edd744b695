/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/orientation.hh>
#include <containment/errors.hh>

#include <utility>

using std::pair;
using std::size_t;
using std::vector;

namespace containment
{
    Orientation::Orientation(Graph base, vector<Bits> out) :
        _base(std::move(base)),
        _out(std::move(out))
    {
        auto n = _base.size();
        if (_out.size() != n)
            throw InvariantViolation("orientation does not match the graph size");
        for (size_t v = 0 ; v != n ; ++v) {
            if (_out[v].size() != n)
                throw InvariantViolation("orientation does not match the graph size");
            if (! _out[v].is_subset_of(_base.neighbourhood(v)))
                throw InvariantViolation("orientation has an arc on a non-edge at '" + _base.label(v) + "'");
        }
        for (auto & [a, b] : _base.edges())
            if (_out[a].test(b) == _out[b].test(a))
                throw InvariantViolation("edge " + _base.label(a) + " " + _base.label(b)
                        + " must be oriented exactly once");
    }

    auto Orientation::from_arcs(Graph base, const vector<pair<size_t, size_t>> & arcs) -> Orientation
    {
        vector<Bits> out(base.size(), Bits(base.size()));
        for (auto & [a, b] : arcs)
            out[a].set(b);
        return Orientation(std::move(base), std::move(out));
    }

    auto Orientation::arcs() const -> vector<pair<size_t, size_t>>
    {
        vector<pair<size_t, size_t>> result;
        for (size_t a = 0 ; a != size() ; ++a)
            for (auto b = _out[a].find_first() ; b != Bits::npos ; b = _out[a].find_next(b))
                result.emplace_back(a, b);
        return result;
    }

    auto Orientation::is_transitive() const -> bool
    {
        for (size_t x = 0 ; x != size() ; ++x)
            for (auto y = _out[x].find_first() ; y != Bits::npos ; y = _out[x].find_next(y))
                if (! _out[y].is_subset_of(_out[x]))
                    return false;
        return true;
    }

    auto Orientation::reversed() const -> Orientation
    {
        vector<Bits> in(size(), Bits(size()));
        for (auto & [a, b] : arcs())
            in[b].set(a);
        return Orientation(_base, std::move(in));
    }

    auto Orientation::restrict_to(const Graph & sub) const -> Orientation
    {
        auto n = sub.size();
        vector<size_t> map(n);
        for (size_t v = 0 ; v != n ; ++v) {
            auto w = _base.labels().find(sub.label(v));
            if (! w)
                throw NotNested("vertex '" + sub.label(v) + "' is missing from the larger graph");
            map[v] = *w;
        }

        vector<Bits> out(n, Bits(n));
        for (size_t a = 0 ; a != n ; ++a)
            for (size_t b = 0 ; b != n ; ++b) {
                if (a == b)
                    continue;
                if (sub.adjacent(a, b) != _base.adjacent(map[a], map[b]))
                    throw NotNested("pair " + sub.label(a) + " " + sub.label(b) + " is not induced");
                if (_out[map[a]].test(map[b]))
                    out[a].set(b);
            }
        return Orientation(sub, std::move(out));
    }
}
