#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unavoidable/bitset.hpp"
#include "unavoidable/ratio.hpp"

namespace unav {

enum class Color { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

// Exact density as an integer pair: count / total.
struct Density {
    long long count = 0;
    long long total = 1;
    double to_double() const { return double(count) / double(total); }
    // density <=> a/b, cross-multiplied
    bool at_least(const Ratio& r) const {
        return (__int128)count * r.den >= (__int128)r.num * total;
    }
};

// 2-edge-colored complete graph on n labeled vertices. Adjacency is stored
// as packed bit rows per color; blue is maintained explicitly so both colors
// get word-parallel intersections.
class ColoredCompleteGraph {
public:
    explicit ColoredCompleteGraph(int n);

    int n() const { return n_; }

    bool is_red(int u, int v) const { return red_[u].test(v); }
    Color color_of(int u, int v) const { return is_red(u, v) ? Color::Red : Color::Blue; }

    void set_color(int u, int v, Color c);

    const Bitset& row(int v, Color c) const { return c == Color::Red ? red_[v] : blue_[v]; }

    int degree(int v, Color c) const { return row(v, c).count(); }

    long long pair_count() const { return (long long)n_ * (n_ - 1) / 2; }
    long long count_edges(Color c) const;

    bool operator==(const ColoredCompleteGraph& o) const = default;

private:
    void check_pair(int u, int v) const;

    int n_;
    std::vector<Bitset> red_;
    std::vector<Bitset> blue_;
};

// k-subsets a/b certifying membership in the unavoidable pattern family:
// one color class restricted to a_set (+ b_set for two-cliques) is exactly
// the stated clique(s), everything else gets the other color.
struct FkWitness {
    enum class Variant { OneClique, TwoCliques };
    std::vector<int> a_set; // sorted
    std::vector<int> b_set; // sorted
    Color color = Color::Red;
    Variant variant = Variant::OneClique;

    bool operator==(const FkWitness&) const = default;
};

Density color_density(const ColoredCompleteGraph& g, Color c);

// Single-vertex neighborhood in one color.
Bitset neighborhood(const ColoredCompleteGraph& g, int v, Color c);
// Vertices adjacent in color c to every vertex of U; U empty -> all vertices.
Bitset common_neighborhood(const ColoredCompleteGraph& g, const std::vector<int>& U, Color c);
Bitset common_neighborhood(const ColoredCompleteGraph& g, const Bitset& U, Color c);

// Uniform over all colorings with exactly m red pairs (partial Fisher-Yates
// over pair indices). Deterministic for a fixed seed.
ColoredCompleteGraph random_coloring(int n, long long m, uint64_t seed);

bool verify_fk_witness(const ColoredCompleteGraph& g, const FkWitness& w);

// Induced coloring on the listed vertices (order gives the new labels).
ColoredCompleteGraph induced_coloring(const ColoredCompleteGraph& g, const std::vector<int>& verts);

} // namespace unav
