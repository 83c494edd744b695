/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/comparability.hh>
#include <containment/errors.hh>

#include <algorithm>
#include <deque>
#include <stdexcept>

using std::function;
using std::optional;
using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace
{
    using namespace containment;

    using Arc = pair<size_t, size_t>;

    // Calls push on every arc forced by (a, b) in h.
    template <typename Push_>
    auto for_each_forced(const Graph & h, size_t a, size_t b, Push_ && push) -> void
    {
        auto & na = h.neighbourhood(a);
        for (auto c = na.find_first() ; c != Bits::npos ; c = na.find_next(c))
            if (c != b && ! h.adjacent(b, c))
                push(a, c);

        auto & nb = h.neighbourhood(b);
        for (auto c = nb.find_first() ; c != Bits::npos ; c = nb.find_next(c))
            if (c != a && ! h.adjacent(a, c))
                push(c, b);
    }

    // Implication class of (a, b) in h, marked into seen.
    auto forced_class(const Graph & h, size_t a, size_t b, vector<Bits> & seen) -> vector<Arc>
    {
        vector<Arc> result;
        std::deque<Arc> queue;
        seen[a].set(b);
        queue.emplace_back(a, b);
        while (! queue.empty()) {
            auto [x, y] = queue.front();
            queue.pop_front();
            result.emplace_back(x, y);
            for_each_forced(h, x, y, [&] (size_t p, size_t q) {
                    if (! seen[p].test(q)) {
                        seen[p].set(q);
                        queue.emplace_back(p, q);
                    }
                    });
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto sorted_arcs_by_label(const Graph & g) -> vector<Arc>
    {
        vector<Arc> arcs;
        for (auto & [a, b] : g.edges()) {
            arcs.emplace_back(a, b);
            arcs.emplace_back(b, a);
        }
        std::sort(arcs.begin(), arcs.end(), [&] (const Arc & x, const Arc & y) {
                if (g.label(x.first) != g.label(y.first))
                    return g.label(x.first) < g.label(y.first);
                return g.label(x.second) < g.label(y.second);
                });
        return arcs;
    }

    class OrientationSearch
    {
        public:
            OrientationSearch(const Graph & g, const function<auto (const Orientation &) -> bool> & visit) :
                _g(g), _edges(g.edges_by_label()), _visit(visit)
            {
            }

            auto run() -> void
            {
                vector<Bits> out(_g.size(), Bits(_g.size()));
                search(out, 0);
            }

        private:
            const Graph & _g;
            vector<Arc> _edges;
            const function<auto (const Orientation &) -> bool> & _visit;
            bool _stopped = false;

            auto assign(vector<Bits> & out, size_t a, size_t b) const -> bool
            {
                std::deque<Arc> queue{ { a, b } };
                while (! queue.empty()) {
                    auto [x, y] = queue.front();
                    queue.pop_front();
                    if (out[y].test(x))
                        return false;
                    if (out[x].test(y))
                        continue;
                    out[x].set(y);

                    // x -> y -> z needs x -> z; z -> x -> y needs z -> y.
                    for (auto z = out[y].find_first() ; z != Bits::npos ; z = out[y].find_next(z))
                        if (out[z].test(x))
                            return false;
                    for (size_t z = 0 ; z != _g.size() ; ++z)
                        if (out[z].test(x) && out[y].test(z))
                            return false;

                    for_each_forced(_g, x, y, [&] (size_t p, size_t q) {
                            if (! out[p].test(q))
                                queue.emplace_back(p, q);
                            });
                }
                return true;
            }

            auto search(vector<Bits> & out, size_t next) -> void
            {
                while (next != _edges.size() && (out[_edges[next].first].test(_edges[next].second)
                            || out[_edges[next].second].test(_edges[next].first)))
                    ++next;

                if (next == _edges.size()) {
                    Orientation o(_g, out);
                    if (o.is_transitive() && ! _visit(o))
                        _stopped = true;
                    return;
                }

                auto [u, v] = _edges[next];
                for (auto [a, b] : { Arc{ v, u }, Arc{ u, v } }) {
                    auto trial = out;
                    if (assign(trial, a, b))
                        search(trial, next + 1);
                    if (_stopped)
                        return;
                }
            }
    };
}

namespace containment
{
    auto ImplicationClass::self_reversing() const -> bool
    {
        return std::any_of(arcs.begin(), arcs.end(), [&] (const Arc & a) {
                return std::binary_search(arcs.begin(), arcs.end(), Arc{ a.second, a.first });
                });
    }

    auto implication_classes(const Graph & g) -> vector<ImplicationClass>
    {
        vector<Bits> seen(g.size(), Bits(g.size()));
        vector<ImplicationClass> result;
        for (auto & [a, b] : sorted_arcs_by_label(g))
            if (! seen[a].test(b))
                result.push_back(ImplicationClass{ forced_class(g, a, b, seen) });
        return result;
    }

    auto try_transitive_orient(const Graph & g) -> optional<Orientation>
    {
        auto n = g.size();
        Graph remaining = g;
        vector<Bits> out(n, Bits(n));

        for (auto & [u, v] : g.edges_by_label()) {
            if (! remaining.adjacent(u, v))
                continue;

            vector<Bits> seen(n, Bits(n));
            auto arcs = forced_class(remaining, v, u, seen);
            for (auto & [x, y] : arcs)
                if (seen[y].test(x))
                    return std::nullopt;

            for (auto & [x, y] : arcs) {
                out[x].set(y);
                remaining.remove_edge(x, y);
            }
        }

        Orientation result(g, std::move(out));
        if (! result.is_transitive())
            throw std::logic_error("implication class decomposition produced a non-transitive orientation");
        return result;
    }

    auto transitive_orient(const Graph & g) -> Orientation
    {
        auto result = try_transitive_orient(g);
        if (! result)
            throw NotComparability(find_odd_cycle_certificate(g));
        return *result;
    }

    auto is_comparability(const Graph & g) -> bool
    {
        return try_transitive_orient(g).has_value();
    }

    auto enumerate_transitive_orientations(const Graph & g,
            const function<auto (const Orientation &) -> bool> & visit) -> void
    {
        OrientationSearch(g, visit).run();
    }

    auto all_transitive_orientations(const Graph & g, size_t cap) -> vector<Orientation>
    {
        vector<Orientation> result;
        bool exceeded = false;
        enumerate_transitive_orientations(g, [&] (const Orientation & o) {
                if (result.size() == cap) {
                    exceeded = true;
                    return false;
                }
                result.push_back(o);
                return true;
                });
        if (exceeded)
            throw CapExceeded("transitive orientations", result.size());
        return result;
    }

    auto orientation_to_poset(const Orientation & o) -> Poset
    {
        if (! o.is_transitive())
            throw NotTransitive("orientation is not transitive");
        auto n = o.size();
        vector<Bits> matrix(n, Bits(n));
        for (auto & [x, y] : o.arcs())
            matrix[y].set(x);
        return Poset::from_matrix(o.base().labels().names(), std::move(matrix));
    }

    auto poset_to_orientation(const Poset & p) -> Orientation
    {
        Graph g(p.labels().names());
        vector<Bits> out(p.size(), Bits(p.size()));
        for (size_t x = 0 ; x != p.size() ; ++x) {
            out[x] = p.below(x);
            for (auto y = p.below(x).find_first() ; y != Bits::npos ; y = p.below(x).find_next(y))
                g.add_edge(x, y);
        }
        return Orientation(std::move(g), std::move(out));
    }

    auto coherent_orient(span<const Graph> sequence) -> vector<Orientation>
    {
        if (sequence.empty())
            return { };

        for (size_t i = 0 ; i + 1 < sequence.size() ; ++i) {
            auto & small = sequence[i];
            auto & big = sequence[i + 1];
            vector<size_t> map(small.size());
            for (size_t v = 0 ; v != small.size() ; ++v) {
                auto w = big.labels().find(small.label(v));
                if (! w)
                    throw NotNested("graph " + std::to_string(i + 1) + " has vertex '" + small.label(v)
                            + "' missing from its successor");
                map[v] = *w;
            }
            for (size_t a = 0 ; a != small.size() ; ++a)
                for (size_t b = a + 1 ; b != small.size() ; ++b)
                    if (small.adjacent(a, b) != big.adjacent(map[a], map[b]))
                        throw NotNested("graph " + std::to_string(i + 1) + " is not an induced subgraph of its successor");
        }

        auto last = transitive_orient(sequence.back());
        vector<Orientation> result;
        for (auto & g : sequence)
            result.push_back(last.restrict_to(g));
        return result;
    }

    auto find_odd_cycle_certificate(const Graph & g) -> OddCycleCertificate
    {
        auto arcs = sorted_arcs_by_label(g);
        auto n = g.size();
        auto m = arcs.size();
        vector<vector<size_t>> id(n, vector<size_t>(n, m));
        for (size_t i = 0 ; i != m ; ++i)
            id[arcs[i].first][arcs[i].second] = i;

        // Walk states are arcs (previous, current); (p, c) may step to (c, w)
        // when p w is not an edge. Search (state, parity) for an odd return.
        for (size_t start = 0 ; start != m ; ++start) {
            vector<size_t> parent(2 * m, 2 * m);
            std::deque<size_t> queue{ 2 * start };
            parent[2 * start] = 2 * start;
            while (! queue.empty()) {
                auto s = queue.front();
                queue.pop_front();
                auto [p, c] = arcs[s / 2];
                auto & nc = g.neighbourhood(c);
                for (auto w = nc.find_first() ; w != Bits::npos ; w = nc.find_next(w)) {
                    if (w != p && g.adjacent(p, w))
                        continue;
                    auto t = 2 * id[c][w] + (1 - s % 2);
                    if (t == 2 * start + 1) {
                        vector<size_t> states{ s };
                        for (auto x = s ; x != 2 * start ; x = parent[x])
                            states.push_back(parent[x]);
                        std::reverse(states.begin(), states.end());
                        OddCycleCertificate result;
                        for (auto x : states)
                            result.walk.push_back(g.label(arcs[x / 2].first));
                        return result;
                    }
                    if (parent[t] == 2 * m) {
                        parent[t] = s;
                        queue.push_back(t);
                    }
                }
            }
        }

        if (is_comparability(g))
            throw IsComparability();
        throw CertificateNotFound("no odd closed walk without triangular chord was found");
    }

    auto validate_certificate(const Graph & g, const OddCycleCertificate & certificate) -> bool
    {
        auto & walk = certificate.walk;
        auto m = walk.size();
        if (m < 3 || m % 2 == 0)
            return false;
        vector<size_t> v;
        for (auto & label : walk) {
            auto i = g.labels().find(label);
            if (! i)
                return false;
            v.push_back(*i);
        }
        for (size_t i = 0 ; i != m ; ++i) {
            if (! g.adjacent(v[i], v[(i + 1) % m]))
                return false;
            if (g.adjacent(v[i], v[(i + 2) % m]))
                return false;
        }
        return true;
    }
}
