/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <containment/verifier.hh>
#include <containment/errors.hh>

#include <algorithm>
#include <map>
#include <optional>

using std::size_t;
using std::string;
using std::vector;

namespace
{
    using namespace containment;

    enum class Inclusion
    {
        equal,
        subset,
        superset,
        incomparable
    };

    auto name(Inclusion i) -> string
    {
        switch (i) {
            case Inclusion::equal:        return "equal";
            case Inclusion::subset:       return "subset";
            case Inclusion::superset:     return "superset";
            case Inclusion::incomparable: return "incomparable";
        }
        return "";
    }

    auto compare_sets(const AtomSet & a, const AtomSet & b) -> Inclusion
    {
        if (a == b)
            return Inclusion::equal;
        if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
            return Inclusion::subset;
        if (b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end()))
            return Inclusion::superset;
        return Inclusion::incomparable;
    }

    auto compare_intervals(const Interval & a, const Interval & b) -> Inclusion
    {
        if (a == b)
            return Inclusion::equal;
        if (b.left <= a.left && a.right <= b.right)
            return Inclusion::subset;
        if (a.left <= b.left && b.right <= a.right)
            return Inclusion::superset;
        return Inclusion::incomparable;
    }

    auto compare_boxes(const vector<Interval> & a, const vector<Interval> & b) -> Inclusion
    {
        bool all_sub = true, all_super = true;
        for (size_t k = 0 ; k != a.size() ; ++k) {
            auto r = compare_intervals(a[k], b[k]);
            if (r == Inclusion::incomparable)
                return Inclusion::incomparable;
            all_sub = all_sub && (r == Inclusion::subset || r == Inclusion::equal);
            all_super = all_super && (r == Inclusion::superset || r == Inclusion::equal);
        }
        if (all_sub && all_super)
            return Inclusion::equal;
        if (all_sub)
            return Inclusion::subset;
        if (all_super)
            return Inclusion::superset;
        return Inclusion::incomparable;
    }

    auto meets(const AtomSet & a, const AtomSet & b) -> bool
    {
        auto i = a.begin(), j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j)
                return true;
            if (*i < *j)
                ++i;
            else
                ++j;
        }
        return false;
    }

    // Index into the representation for every vertex of the structure.
    auto assignment(const LabelIndex & structure, const LabelIndex & rep) -> vector<size_t>
    {
        vector<size_t> result;
        for (auto & label : structure.names()) {
            auto i = rep.find(label);
            if (! i)
                throw MissingVertex(label);
            result.push_back(*i);
        }
        return result;
    }

    // Calls check(v, w, rep_v, rep_w) for every unordered pair v < w, which
    // returns an (expected, observed) pair when they disagree.
    template <typename Check_>
    auto pairwise(const LabelIndex & structure, const LabelIndex & rep, Check_ && check) -> Verdict
    {
        auto map = assignment(structure, rep);
        Verdict result;
        for (size_t v = 0 ; v != structure.size() ; ++v)
            for (size_t w = v + 1 ; w != structure.size() ; ++w)
                if (auto mismatch = check(v, w, map[v], map[w]))
                    result.violations.push_back(Violation{ structure.name(v), structure.name(w),
                            mismatch->first, mismatch->second });
        result.ok = result.violations.empty();
        return result;
    }

    using Mismatch = std::optional<std::pair<string, string>>;

    template <typename Compare_>
    auto containment_graph(const Graph & g, const LabelIndex & rep, Compare_ && compare) -> Verdict
    {
        return pairwise(g.labels(), rep, [&] (size_t v, size_t w, size_t rv, size_t rw) -> Mismatch {
                auto r = compare(rv, rw);
                bool nested = r == Inclusion::subset || r == Inclusion::superset;
                if (nested == g.adjacent(v, w))
                    return std::nullopt;
                return std::pair{ string(g.adjacent(v, w) ? "adjacent" : "non-adjacent"), name(r) };
                });
    }

    template <typename Compare_>
    auto containment_poset(const Poset & p, const LabelIndex & rep, Compare_ && compare) -> Verdict
    {
        return pairwise(p.labels(), rep, [&] (size_t v, size_t w, size_t rv, size_t rw) -> Mismatch {
                auto r = compare(rv, rw);
                string expected;
                bool agree;
                if (p.less(v, w)) {
                    expected = "less";
                    agree = r == Inclusion::subset;
                }
                else if (p.less(w, v)) {
                    expected = "greater";
                    agree = r == Inclusion::superset;
                }
                else {
                    expected = "incomparable";
                    agree = r == Inclusion::incomparable || r == Inclusion::equal;
                }
                if (agree)
                    return std::nullopt;
                return std::pair{ expected, name(r) };
                });
    }

    template <typename Key_>
    auto duplicates_of(const LabelIndex & labels, const vector<Key_> & keys) -> InjectivityReport
    {
        std::map<Key_, vector<string>> groups;
        vector<const Key_ *> order;
        for (size_t v = 0 ; v != keys.size() ; ++v) {
            auto [it, fresh] = groups.try_emplace(keys[v]);
            if (fresh)
                order.push_back(&it->first);
            it->second.push_back(labels.name(v));
        }

        InjectivityReport result;
        for (auto key : order)
            if (groups[*key].size() > 1)
                result.duplicates.push_back(groups[*key]);
        result.injective = result.duplicates.empty();
        return result;
    }

    auto interval_keys(const IntervalRep & f) -> vector<std::pair<std::int64_t, std::int64_t>>
    {
        vector<std::pair<std::int64_t, std::int64_t>> keys;
        for (size_t v = 0 ; v != f.size() ; ++v)
            keys.emplace_back(f.interval(v).left, f.interval(v).right);
        return keys;
    }
}

namespace containment
{
    auto verify_containment_graph(const Graph & g, const SetFamily & f) -> Verdict
    {
        return containment_graph(g, f.labels(), [&] (size_t a, size_t b) { return compare_sets(f.set(a), f.set(b)); });
    }

    auto verify_containment_graph(const Graph & g, const IntervalRep & f) -> Verdict
    {
        return containment_graph(g, f.labels(), [&] (size_t a, size_t b) {
                return compare_intervals(f.interval(a), f.interval(b)); });
    }

    auto verify_containment_graph(const Graph & g, const BoxRep & f) -> Verdict
    {
        return containment_graph(g, f.labels(), [&] (size_t a, size_t b) { return compare_boxes(f.box(a), f.box(b)); });
    }

    auto verify_containment_graph(const Graph & g, const StarSubtreeRep & f) -> Verdict
    {
        return verify_containment_graph(g, f.as_family());
    }

    auto verify_containment_poset(const Poset & p, const SetFamily & f) -> Verdict
    {
        return containment_poset(p, f.labels(), [&] (size_t a, size_t b) { return compare_sets(f.set(a), f.set(b)); });
    }

    auto verify_containment_poset(const Poset & p, const IntervalRep & f) -> Verdict
    {
        return containment_poset(p, f.labels(), [&] (size_t a, size_t b) {
                return compare_intervals(f.interval(a), f.interval(b)); });
    }

    auto verify_containment_poset(const Poset & p, const BoxRep & f) -> Verdict
    {
        return containment_poset(p, f.labels(), [&] (size_t a, size_t b) { return compare_boxes(f.box(a), f.box(b)); });
    }

    auto verify_containment_poset(const Poset & p, const StarSubtreeRep & f) -> Verdict
    {
        return verify_containment_poset(p, f.as_family());
    }

    auto verify_intersection(const Graph & g, const SetFamily & f) -> Verdict
    {
        return pairwise(g.labels(), f.labels(), [&] (size_t v, size_t w, size_t rv, size_t rw) -> Mismatch {
                bool m = meets(f.set(rv), f.set(rw));
                if (m == g.adjacent(v, w))
                    return std::nullopt;
                return std::pair{ string(g.adjacent(v, w) ? "adjacent" : "non-adjacent"),
                        string(m ? "intersecting" : "disjoint") };
                });
    }

    auto verify_overlap(const Graph & g, const SetFamily & f) -> Verdict
    {
        return pairwise(g.labels(), f.labels(), [&] (size_t v, size_t w, size_t rv, size_t rw) -> Mismatch {
                auto & a = f.set(rv);
                auto & b = f.set(rw);
                string observed;
                if (! meets(a, b))
                    observed = "disjoint";
                else if (compare_sets(a, b) != Inclusion::incomparable)
                    observed = name(compare_sets(a, b));
                else
                    observed = "overlapping";
                if ((observed == "overlapping") == g.adjacent(v, w))
                    return std::nullopt;
                return std::pair{ string(g.adjacent(v, w) ? "adjacent" : "non-adjacent"), observed };
                });
    }

    auto verify_disjointedness(const Graph & g, const SetFamily & f) -> Verdict
    {
        return pairwise(g.labels(), f.labels(), [&] (size_t v, size_t w, size_t rv, size_t rw) -> Mismatch {
                bool disjoint = ! meets(f.set(rv), f.set(rw));
                if (disjoint == g.adjacent(v, w))
                    return std::nullopt;
                return std::pair{ string(g.adjacent(v, w) ? "adjacent" : "non-adjacent"),
                        string(disjoint ? "disjoint" : "intersecting") };
                });
    }

    auto injectivity_audit(const SetFamily & f) -> InjectivityReport
    {
        return duplicates_of(f.labels(), f.sets());
    }

    auto injectivity_audit(const IntervalRep & f) -> InjectivityReport
    {
        return duplicates_of(f.labels(), interval_keys(f));
    }

    auto injectivity_audit(const BoxRep & f) -> InjectivityReport
    {
        vector<vector<std::pair<std::int64_t, std::int64_t>>> keys;
        for (size_t v = 0 ; v != f.size() ; ++v) {
            keys.emplace_back();
            for (auto & i : f.box(v))
                keys.back().emplace_back(i.left, i.right);
        }
        return duplicates_of(f.labels(), keys);
    }

    auto injectivity_audit(const StarSubtreeRep & f) -> InjectivityReport
    {
        return injectivity_audit(f.as_family());
    }

    auto derive_containment_order(const SetFamily & f) -> Poset
    {
        auto n = f.size();
        vector<Bits> matrix(n, Bits(n));
        for (size_t x = 0 ; x != n ; ++x)
            for (size_t y = 0 ; y != n ; ++y)
                if (compare_sets(f.set(x), f.set(y)) == Inclusion::subset)
                    matrix[x].set(y);
        return Poset::from_matrix(f.labels().names(), std::move(matrix));
    }
}
