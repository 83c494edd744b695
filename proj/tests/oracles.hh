/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_TESTS_ORACLES_HH
#define CONTAINMENT_TESTS_ORACLES_HH

#include <cstdint>
#include <random>
#include <vector>

/**
 * Brute-force reference implementations on at most eight vertices, written
 * against plain bitmasks so that they share no code with the library.
 */
namespace oracle
{
    inline constexpr int max_vertices = 8;

    struct SmallGraph
    {
        int n = 0;
        std::uint32_t adj[max_vertices] = { };

        auto adjacent(int a, int b) const -> bool { return (adj[a] >> b) & 1u; }
        auto add_edge(int a, int b) -> void { adj[a] |= 1u << b; adj[b] |= 1u << a; }
        auto edges() const -> std::vector<std::pair<int, int>>;
    };

    /// above[x] bit y means x < y.
    struct SmallPoset
    {
        int n = 0;
        std::uint32_t above[max_vertices] = { };

        auto less(int x, int y) const -> bool { return (above[x] >> y) & 1u; }
        auto comparable(int x, int y) const -> bool { return less(x, y) || less(y, x); }
    };

    /// One representative per isomorphism class, n <= 6.
    auto all_graphs(int n) -> std::vector<SmallGraph>;

    /// Every way of adding one vertex to each input graph; up to isomorphism
    /// this covers every graph on one more vertex.
    auto one_vertex_extensions(const std::vector<SmallGraph> & graphs) -> std::vector<SmallGraph>;

    auto random_graph(int n, double density, std::mt19937 & rng) -> SmallGraph;
    auto complement(const SmallGraph & g) -> SmallGraph;

    /// Number of transitive orientations found by trying all 2^|E| of them,
    /// stopping once limit is reached.
    auto count_transitive_orientations(const SmallGraph & g, std::uint64_t limit = ~std::uint64_t(0)) -> std::uint64_t;
    auto is_comparability(const SmallGraph & g) -> bool;

    /// Odd closed walk, consecutive vertices adjacent, no v_i v_{i+2} edge.
    auto is_chordless_odd_walk(const SmallGraph & g, const std::vector<int> & walk) -> bool;

    /// One representative per isomorphism class, n <= 6.
    auto all_posets(int n) -> std::vector<SmallPoset>;

    /// Random naturally labelled order, closed, then shuffled.
    auto random_poset(int n, double density, std::mt19937 & rng) -> SmallPoset;

    /// Random order of height at most two, shuffled; rich in dimension three.
    auto random_bipartite_poset(int n, double density, std::mt19937 & rng) -> SmallPoset;

    /// The standard example on three pairs plus n - 6 elements placed at
    /// random above or below a random subset, shuffled. Always dimension 3.
    auto random_s3_poset(int n, double density, std::mt19937 & rng) -> SmallPoset;

    auto comparability(const SmallPoset & p) -> SmallGraph;

    /// Every permutation of 0..n-1 respecting p, in lexicographic order.
    auto linear_extensions(const SmallPoset & p) -> std::vector<std::vector<int>>;

    /// Smallest number of linear extensions whose intersection is p.
    auto dimension(const SmallPoset & p) -> int;

    /// Intersection of the given permutations equals p.
    auto realizes(const SmallPoset & p, const std::vector<std::vector<int>> & orders) -> bool;

    auto isomorphic(const SmallPoset & a, const SmallPoset & b) -> bool;

    /// Number of classes of incomparable elements with equal up- and down-sets.
    auto reduced_size(const SmallPoset & p) -> int;
}

#endif
