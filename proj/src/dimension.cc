/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/dimension.hh>
#include <containment/comparability.hh>
#include <containment/errors.hh>
#include <containment/order_core.hh>

#include <algorithm>
#include <stdexcept>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    using namespace containment;

    using Permutation = vector<size_t>;

    class ExtensionEnumerator
    {
        public:
            ExtensionEnumerator(const Poset & p, size_t cap) :
                _p(p), _cap(cap), _placed(p.size())
            {
            }

            auto run() -> vector<Permutation>
            {
                recurse();
                return std::move(_found);
            }

        private:
            const Poset & _p;
            size_t _cap;
            Bits _placed;
            Permutation _current;
            vector<Permutation> _found;

            auto recurse() -> void
            {
                if (_current.size() == _p.size()) {
                    if (_found.size() == _cap)
                        throw CapExceeded("linear extensions", _found.size());
                    _found.push_back(_current);
                    return;
                }

                for (size_t v = 0 ; v != _p.size() ; ++v) {
                    if (_placed.test(v) || ! _p.below(v).is_subset_of(_placed))
                        continue;
                    _placed.set(v);
                    _current.push_back(v);
                    recurse();
                    _current.pop_back();
                    _placed.reset(v);
                }
            }
    };

    auto to_order(const Poset & p, const Permutation & perm) -> LinearOrder
    {
        LinearOrder result;
        for (auto v : perm)
            result.labels.push_back(p.label(v));
        return result;
    }

    /**
     * Minimum set cover over ordered incomparable pairs: element 2i means
     * "x_i placed before y_i", element 2i + 1 the reverse, for the i-th
     * incomparable pair x_i, y_i. Each extension covers one of each.
     */
    class RealizerSearch
    {
        public:
            explicit RealizerSearch(const Poset & p, vector<Permutation> extensions) :
                _extensions(std::move(extensions))
            {
                auto n = p.size();
                vector<std::pair<size_t, size_t>> pairs;
                for (size_t x = 0 ; x != n ; ++x)
                    for (size_t y = x + 1 ; y != n ; ++y)
                        if (! p.comparable(x, y))
                            pairs.emplace_back(x, y);

                _universe = Bits(2 * pairs.size());
                _universe.set();
                _coverers.resize(2 * pairs.size());

                vector<size_t> rank(n);
                for (size_t e = 0 ; e != _extensions.size() ; ++e) {
                    for (size_t r = 0 ; r != n ; ++r)
                        rank[_extensions[e][r]] = r;
                    Bits cover(2 * pairs.size());
                    for (size_t i = 0 ; i != pairs.size() ; ++i) {
                        auto bit = rank[pairs[i].first] < rank[pairs[i].second] ? 2 * i : 2 * i + 1;
                        cover.set(bit);
                        _coverers[bit].push_back(e);
                    }
                    _covers.push_back(std::move(cover));
                }
            }

            auto pairs_empty() const -> bool { return _universe.none(); }

            auto greedy_bound() const -> unsigned
            {
                auto uncovered = _universe;
                unsigned used = 0;
                while (uncovered.any()) {
                    size_t best = 0, best_gain = 0;
                    for (size_t e = 0 ; e != _covers.size() ; ++e) {
                        auto gain = (_covers[e] & uncovered).count();
                        if (gain > best_gain) {
                            best = e;
                            best_gain = gain;
                        }
                    }
                    uncovered -= _covers[best];
                    ++used;
                }
                return used;
            }

            auto feasible(unsigned k) const -> bool
            {
                return coverable(_universe, k, 0);
            }

            /// Lexicographically least index set of size k covering everything.
            auto lex_first(unsigned k) const -> vector<size_t>
            {
                vector<size_t> chosen;
                auto uncovered = _universe;
                size_t from = 0;
                for (unsigned slot = 0 ; slot != k ; ++slot) {
                    auto remaining = k - slot - 1;
                    bool found = false;
                    for (size_t e = from ; e != _covers.size() ; ++e)
                        if (coverable(uncovered - _covers[e], remaining, e + 1)) {
                            chosen.push_back(e);
                            uncovered -= _covers[e];
                            from = e + 1;
                            found = true;
                            break;
                        }
                    if (! found)
                        throw std::logic_error("realizer search lost a feasible cover");
                }
                return chosen;
            }

            auto extension(size_t e) const -> const Permutation & { return _extensions[e]; }

        private:
            vector<Permutation> _extensions;
            vector<Bits> _covers;
            vector<vector<size_t>> _coverers;
            Bits _universe;

            // Can uncovered be covered by at most r extensions with index >= from?
            auto coverable(const Bits & uncovered, unsigned r, size_t from) const -> bool
            {
                if (uncovered.none())
                    return true;
                if (r == 0)
                    return false;

                if (r == 1) {
                    for (size_t e = from ; e != _covers.size() ; ++e)
                        if (uncovered.is_subset_of(_covers[e]))
                            return true;
                    return false;
                }

                // Branch on the uncovered element with the fewest candidate extensions.
                size_t best_element = Bits::npos, best_count = Bits::npos;
                vector<size_t>::const_iterator best_start;
                for (auto x = uncovered.find_first() ; x != Bits::npos ; x = uncovered.find_next(x)) {
                    auto start = std::lower_bound(_coverers[x].begin(), _coverers[x].end(), from);
                    auto count = size_t(_coverers[x].end() - start);
                    if (count < best_count) {
                        best_element = x;
                        best_count = count;
                        best_start = start;
                    }
                    if (count == 0)
                        return false;
                }

                for (auto e = best_start ; e != _coverers[best_element].end() ; ++e)
                    if (coverable(uncovered - _covers[*e], r - 1, from))
                        return true;
                return false;
            }
    };
}

namespace containment
{
    auto linear_extensions(const Poset & p, size_t cap) -> vector<LinearOrder>
    {
        vector<LinearOrder> result;
        for (auto & perm : ExtensionEnumerator(p, cap).run())
            result.push_back(to_order(p, perm));
        return result;
    }

    auto verify_realizer(const Poset & p, const Realizer & r) -> bool
    {
        auto n = p.size();
        vector<Bits> meet(n, Bits(n));
        for (auto & row : meet)
            row.set();
        for (size_t x = 0 ; x != n ; ++x)
            meet[x].reset(x);

        for (auto & order : r.orders) {
            if (order.labels.size() != n || ! LabelIndex(order.labels).same_set(p.labels()))
                throw LabelMismatch("realizer member is not a permutation of the poset's labels");

            vector<size_t> rank(n);
            for (size_t i = 0 ; i != n ; ++i)
                rank[p.index_of(order.labels[i])] = i;
            for (size_t x = 0 ; x != n ; ++x)
                for (size_t y = 0 ; y != n ; ++y)
                    if (rank[x] >= rank[y])
                        meet[x].reset(y);
        }

        if (r.orders.empty())
            return n == 0;
        for (size_t x = 0 ; x != n ; ++x)
            if (meet[x] != p.above(x))
                return false;
        return true;
    }

    auto exact_dimension(const Poset & p, unsigned budget, size_t extension_cap) -> DimensionResult
    {
        if (p.size() == 0)
            throw EmptyInput("dimension of the empty poset is not defined");

        RealizerSearch search(p, ExtensionEnumerator(p, extension_cap).run());
        if (search.pairs_empty())
            return DimensionResult{ 1, Realizer{ { to_order(p, search.extension(0)) } } };

        auto upper = search.greedy_bound();
        for (unsigned k = 2 ; ; ++k) {
            if (k > budget)
                throw BudgetExceeded(k, upper);
            if (k == upper || search.feasible(k)) {
                DimensionResult result{ k, { } };
                for (auto e : search.lex_first(k))
                    result.witness.orders.push_back(to_order(p, search.extension(e)));
                return result;
            }
        }
    }

    auto two_realizer(const Poset & p) -> optional<Realizer>
    {
        auto conjugate = try_transitive_orient(complement(comparability_graph(p)));
        if (! conjugate)
            return std::nullopt;
        auto q = orientation_to_poset(*conjugate);

        auto n = p.size();
        vector<size_t> first(n);
        for (size_t v = 0 ; v != n ; ++v)
            first[v] = v;
        auto second = first;

        std::sort(first.begin(), first.end(), [&] (size_t x, size_t y) { return p.less(x, y) || q.less(x, y); });
        std::sort(second.begin(), second.end(), [&] (size_t x, size_t y) { return p.less(x, y) || q.less(y, x); });

        Realizer result{ { to_order(p, first), to_order(p, second) } };
        if (! verify_realizer(p, result))
            throw std::logic_error("conjugate order did not produce a realizer");
        return result;
    }

    auto is_two_dimensional(const Poset & p) -> bool
    {
        return two_realizer(p).has_value();
    }

    auto dimension(const Poset & p, unsigned budget, size_t extension_cap) -> DimensionResult
    {
        if (p.size() == 0)
            throw EmptyInput("dimension of the empty poset is not defined");

        if (p.is_chain()) {
            vector<size_t> order(p.size());
            for (size_t v = 0 ; v != p.size() ; ++v)
                order[v] = v;
            std::sort(order.begin(), order.end(), [&] (size_t x, size_t y) { return p.less(x, y); });
            return DimensionResult{ 1, Realizer{ { to_order(p, order) } } };
        }

        if (auto r = two_realizer(p)) {
            if (budget < 2)
                throw BudgetExceeded(2, 2);
            return DimensionResult{ 2, std::move(*r) };
        }

        if (budget < 3)
            throw BudgetExceeded(3, hiraguchi_bound(p.size()));
        return exact_dimension(p, budget, extension_cap);
    }

    auto graph_dimension(const Graph & g, unsigned budget) -> unsigned
    {
        return dimension(orientation_to_poset(transitive_orient(g)), budget).dimension;
    }

    auto hiraguchi_bound(size_t n) -> unsigned
    {
        if (n == 0)
            throw EmptyInput("bound requires at least one element");
        return unsigned((n + 1) / 2);
    }

    auto box_dimension(const Graph & g, unsigned budget) -> unsigned
    {
        return (graph_dimension(g, budget) + 1) / 2;
    }
}
