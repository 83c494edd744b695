/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/representation.hh>
#include <containment/comparability.hh>
#include <containment/errors.hh>
#include <containment/order_core.hh>

#include <algorithm>
#include <set>
#include <stdexcept>

using std::int64_t;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    using namespace containment;

    template <typename Key_>
    auto all_distinct(vector<Key_> keys) -> bool
    {
        std::sort(keys.begin(), keys.end());
        return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    }

    auto ranks(const Poset & p, const LinearOrder & order) -> vector<int64_t>
    {
        if (order.labels.size() != p.size())
            throw LabelMismatch("linear order does not cover the poset");
        vector<int64_t> result(p.size(), 0);
        for (size_t i = 0 ; i != order.labels.size() ; ++i)
            result[p.index_of(order.labels[i])] = int64_t(i) + 1;
        return result;
    }
}

namespace containment
{
    SetFamily::SetFamily(vector<string> labels, vector<AtomSet> sets, bool require_injective) :
        _labels(std::move(labels)),
        _sets(std::move(sets))
    {
        if (_sets.size() != _labels.size())
            throw InvariantViolation("set family needs exactly one set per label");
        for (size_t v = 0 ; v != _sets.size() ; ++v) {
            auto & s = _sets[v];
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (s.empty())
                throw InvariantViolation("set for '" + label(v) + "' is empty");
        }
        _injective = all_distinct(_sets);
        if (require_injective && ! _injective)
            throw InvariantViolation("set family is required to be injective but repeats a set");
    }

    auto SetFamily::max_atom() const -> Atom
    {
        Atom result = -1;
        for (auto & s : _sets)
            result = std::max(result, s.back());
        return result;
    }

    IntervalRep::IntervalRep(vector<string> labels, vector<Interval> intervals) :
        _labels(std::move(labels)),
        _intervals(std::move(intervals))
    {
        if (_intervals.size() != _labels.size())
            throw InvariantViolation("interval representation needs exactly one interval per label");
        vector<int64_t> lefts, rights;
        for (size_t v = 0 ; v != _intervals.size() ; ++v) {
            if (_intervals[v].left >= _intervals[v].right)
                throw InvariantViolation("interval for '" + label(v) + "' must have left < right");
            lefts.push_back(_intervals[v].left);
            rights.push_back(_intervals[v].right);
        }
        if (! all_distinct(lefts) || ! all_distinct(rights))
            throw InvariantViolation("interval endpoints must be distinct on each side");
    }

    BoxRep::BoxRep(vector<string> labels, size_t d, vector<vector<Interval>> boxes) :
        _labels(std::move(labels)),
        _d(d),
        _boxes(std::move(boxes))
    {
        if (_d < 1)
            throw InvalidD("box dimension must be at least 1");
        if (_boxes.size() != _labels.size())
            throw MalformedBox("box representation needs exactly one box per label");
        for (size_t v = 0 ; v != _boxes.size() ; ++v) {
            if (_boxes[v].size() != _d)
                throw MalformedBox("box for '" + label(v) + "' does not have " + std::to_string(_d) + " axes");
            for (auto & i : _boxes[v])
                if (i.left >= i.right)
                    throw MalformedBox("box for '" + label(v) + "' has an axis with left >= right");
        }
        for (size_t k = 0 ; k != _d ; ++k) {
            vector<int64_t> lefts, rights;
            for (auto & b : _boxes) {
                lefts.push_back(b[k].left);
                rights.push_back(b[k].right);
            }
            if (! all_distinct(lefts) || ! all_distinct(rights))
                throw MalformedBox("box endpoints on axis " + std::to_string(k + 1) + " must be distinct on each side");
        }
    }

    StarSubtreeRep::StarSubtreeRep(vector<string> labels, vector<vector<size_t>> leaves) :
        _labels(std::move(labels)),
        _leaves(std::move(leaves))
    {
        auto n = _labels.size();
        if (_leaves.size() != n)
            throw InvariantViolation("star representation needs exactly one leaf set per label");
        for (size_t v = 0 ; v != n ; ++v) {
            auto & l = _leaves[v];
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
            if (! l.empty() && (l.front() < 1 || l.back() > n))
                throw InvariantViolation("leaf of '" + label(v) + "' is outside 1.." + std::to_string(n));
            if (! std::binary_search(l.begin(), l.end(), v + 1))
                throw InvariantViolation("leaf set of '" + label(v) + "' must contain its own leaf "
                        + std::to_string(v + 1));
        }
    }

    auto StarSubtreeRep::as_family() const -> SetFamily
    {
        vector<AtomSet> sets;
        for (auto & l : _leaves) {
            AtomSet s{ 0 };
            for (auto leaf : l)
                s.push_back(Atom(leaf));
            sets.push_back(std::move(s));
        }
        return SetFamily(_labels.names(), std::move(sets));
    }

    auto downset_representation(const Poset & p) -> SetFamily
    {
        vector<AtomSet> sets;
        for (size_t k = 0 ; k != p.size() ; ++k) {
            AtomSet s;
            for (size_t i = 0 ; i != p.size() ; ++i)
                if (i == k || p.less(i, k))
                    s.push_back(Atom(i) + 1);
            sets.push_back(std::move(s));
        }
        return SetFamily(p.labels().names(), std::move(sets), true);
    }

    auto star_subtree_representation(const Orientation & o) -> StarSubtreeRep
    {
        if (! o.is_transitive())
            throw NotTransitive("star subtrees need a transitive orientation");
        vector<vector<size_t>> leaves(o.size());
        for (size_t j = 0 ; j != o.size() ; ++j)
            leaves[j].push_back(j + 1);
        for (auto & [i, j] : o.arcs())
            leaves[j].push_back(i + 1);
        return StarSubtreeRep(o.base().labels().names(), std::move(leaves));
    }

    auto star_subtree_representation(const Poset & p) -> StarSubtreeRep
    {
        vector<vector<size_t>> leaves(p.size());
        for (size_t j = 0 ; j != p.size() ; ++j) {
            leaves[j].push_back(j + 1);
            for (auto i = p.below(j).find_first() ; i != Bits::npos ; i = p.below(j).find_next(i))
                leaves[j].push_back(i + 1);
        }
        return StarSubtreeRep(p.labels().names(), std::move(leaves));
    }

    auto intervals_from_realizer(const Poset & p, const LinearOrder & first, const LinearOrder & second)
        -> IntervalRep
    {
        auto n = int64_t(p.size());
        auto r1 = ranks(p, first), r2 = ranks(p, second);
        vector<Interval> intervals;
        for (size_t v = 0 ; v != p.size() ; ++v)
            intervals.push_back(Interval{ n - r1[v], n + r2[v] });
        return IntervalRep(p.labels().names(), std::move(intervals));
    }

    auto interval_representation(const Poset & p) -> IntervalRep
    {
        auto r = two_realizer(p);
        if (! r)
            throw DimensionTooHigh(3, 2);
        return intervals_from_realizer(p, r->orders[0], r->orders[1]);
    }

    auto box_representation(const Poset & p, size_t d) -> BoxRep
    {
        if (d < 1)
            throw InvalidD("box dimension must be at least 1");

        auto limit = unsigned(std::min<size_t>(2 * d, unlimited_budget));
        DimensionResult dim;
        try {
            dim = dimension(p, limit);
        }
        catch (const BudgetExceeded & e) {
            throw DimensionTooHigh(e.lower(), limit);
        }

        auto orders = dim.witness.orders;
        while (orders.size() < 2 * d)
            orders.push_back(orders.back());

        vector<vector<Interval>> boxes(p.size());
        for (size_t k = 0 ; k != d ; ++k) {
            auto axis = intervals_from_realizer(p, orders[2 * k], orders[2 * k + 1]);
            for (size_t v = 0 ; v != p.size() ; ++v)
                boxes[v].push_back(axis.interval(v));
        }
        return BoxRep(p.labels().names(), d, std::move(boxes));
    }

    auto boxes_to_embedding(const BoxRep & boxes) -> Embedding
    {
        int64_t largest = 0;
        for (size_t v = 0 ; v != boxes.size() ; ++v)
            for (auto & i : boxes.box(v))
                largest = std::max(largest, i.right);

        Embedding result{ boxes.labels().names(), { }, largest + 1 };
        for (size_t v = 0 ; v != boxes.size() ; ++v) {
            vector<int64_t> point;
            for (auto & i : boxes.box(v)) {
                point.push_back(i.left);
                point.push_back(result.offset - i.right);
            }
            result.points.push_back(std::move(point));
        }
        return result;
    }

    auto embedding_order(const Embedding & e) -> Poset
    {
        auto n = e.labels.size();
        vector<Bits> matrix(n, Bits(n));
        for (size_t x = 0 ; x != n ; ++x)
            for (size_t y = 0 ; y != n ; ++y) {
                if (x == y || e.points[x].size() != e.points[y].size())
                    continue;
                bool dominates = true;
                for (size_t c = 0 ; c != e.points[x].size() ; ++c)
                    if (e.points[x][c] <= e.points[y][c])
                        dominates = false;
                if (dominates)
                    matrix[x].set(y);
            }
        return Poset::from_matrix(e.labels, std::move(matrix));
    }

    auto composition_poset(const SetFamily & family, unsigned copies) -> Poset
    {
        if (copies < 1)
            throw InvalidCount("composition poset needs at least one copy of each set");

        vector<string> names;
        vector<size_t> origin;
        for (size_t v = 0 ; v != family.size() ; ++v)
            for (unsigned a = 1 ; a <= copies ; ++a) {
                names.push_back(family.label(v) + "#" + std::to_string(a));
                origin.push_back(v);
            }

        auto m = names.size();
        vector<Bits> matrix(m, Bits(m));
        for (size_t x = 0 ; x != m ; ++x)
            for (size_t y = 0 ; y != m ; ++y) {
                auto & sx = family.set(origin[x]);
                auto & sy = family.set(origin[y]);
                if (sx.size() < sy.size() && std::includes(sy.begin(), sy.end(), sx.begin(), sx.end()))
                    matrix[x].set(y);
            }
        return Poset::from_matrix(std::move(names), std::move(matrix));
    }

    auto overlap_from_intersection(const SetFamily & family) -> SetFamily
    {
        auto fresh = std::max<Atom>(family.max_atom(), 0) + 1;
        vector<AtomSet> sets;
        for (size_t v = 0 ; v != family.size() ; ++v) {
            auto s = family.set(v);
            s.push_back(fresh++);
            sets.push_back(std::move(s));
        }
        return SetFamily(family.labels().names(), std::move(sets), true);
    }

    auto disjointedness_complement(const Graph & g) -> Graph
    {
        return complement(g);
    }
}
