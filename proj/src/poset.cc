/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/poset.hh>
#include <containment/errors.hh>

#include <algorithm>
#include <deque>
#include <utility>

using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    using containment::Bits;

    // Shortest cycle through start in the (unclosed) relation graph.
    auto find_cycle(const vector<Bits> & direct, size_t start) -> vector<size_t>
    {
        auto n = direct.size();
        vector<size_t> parent(n, n);
        std::deque<size_t> queue;
        for (auto w = direct[start].find_first() ; w != Bits::npos ; w = direct[start].find_next(w)) {
            if (w == start)
                return { start };
            if (parent[w] == n) {
                parent[w] = start;
                queue.push_back(w);
            }
        }

        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            if (direct[v].test(start)) {
                vector<size_t> path;
                for (auto x = v ; x != start ; x = parent[x])
                    path.push_back(x);
                path.push_back(start);
                std::reverse(path.begin(), path.end());
                return path;
            }
            for (auto w = direct[v].find_first() ; w != Bits::npos ; w = direct[v].find_next(w))
                if (parent[w] == n && w != start) {
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        return { start };
    }
}

namespace containment
{
    Poset::Poset(vector<string> labels) :
        _labels(std::move(labels)),
        _above(_labels.size(), Bits(_labels.size())),
        _below(_labels.size(), Bits(_labels.size()))
    {
    }

    auto Poset::from_relations(vector<string> labels, const vector<pair<string, string>> & less_than) -> Poset
    {
        LabelIndex index(labels);
        vector<Bits> matrix(index.size(), Bits(index.size()));
        for (auto & [x, y] : less_than)
            matrix[index.index_of(x)].set(index.index_of(y));
        return from_matrix(std::move(labels), std::move(matrix));
    }

    auto Poset::from_matrix(vector<string> labels, vector<Bits> less_than) -> Poset
    {
        Poset result(std::move(labels));
        auto n = result.size();
        if (less_than.size() != n || std::any_of(less_than.begin(), less_than.end(),
                    [n] (const Bits & row) { return row.size() != n; }))
            throw InvariantViolation("relation matrix does not match the label count");

        auto closed = less_than;
        for (size_t k = 0 ; k != n ; ++k)
            for (size_t i = 0 ; i != n ; ++i)
                if (closed[i].test(k))
                    closed[i] |= closed[k];

        for (size_t i = 0 ; i != n ; ++i)
            if (closed[i].test(i)) {
                vector<string> names;
                for (auto v : find_cycle(less_than, i))
                    names.push_back(result.label(v));
                throw CycleDetected(std::move(names));
            }

        result._above = std::move(closed);
        for (size_t i = 0 ; i != n ; ++i)
            for (auto j = result._above[i].find_first() ; j != Bits::npos ; j = result._above[i].find_next(j))
                result._below[j].set(i);
        return result;
    }

    auto Poset::less(const string & x, const string & y) const -> bool
    {
        return less(index_of(x), index_of(y));
    }

    auto Poset::relation_count() const -> size_t
    {
        size_t result = 0;
        for (auto & row : _above)
            result += row.count();
        return result;
    }

    auto Poset::covers() const -> vector<pair<size_t, size_t>>
    {
        vector<pair<size_t, size_t>> result;
        for (size_t x = 0 ; x != size() ; ++x)
            for (auto y = _above[x].find_first() ; y != Bits::npos ; y = _above[x].find_next(y))
                if (! (_above[x] & _below[y]).any())
                    result.emplace_back(x, y);
        return result;
    }

    auto Poset::is_chain() const -> bool
    {
        for (size_t x = 0 ; x != size() ; ++x)
            if ((_above[x].count() + _below[x].count()) + 1 != size())
                return false;
        return true;
    }
}
