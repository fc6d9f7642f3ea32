#pragma once

#include <string>
#include <vector>

#include "dyckcat/dyck.hpp"
#include "dyckcat/subchain.hpp"

namespace dyckcat {

/// Placement of tile t+1 relative to tile t.
enum class Dirn : char { R = 'R', U = 'U' };  // east / north

struct GridPoint {
    int x = 0, y = 0;
    bool operator==(const GridPoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const GridPoint& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// Unit lattice edge with normalized endpoint order.
struct GridEdge {
    GridPoint a, b;
    GridEdge() = default;
    GridEdge(GridPoint p, GridPoint q);
    bool operator==(const GridEdge& o) const { return a == o.a && b == o.b; }
    bool operator<(const GridEdge& o) const { return a == o.a ? b < o.b : a < o.a; }
};

/// Sequence of unit tiles, each attached east or north of its predecessor.
class SnakeGraph {
  public:
    explicit SnakeGraph(std::vector<Dirn> steps);
    SnakeGraph(std::vector<Dirn> steps, std::vector<GridPoint> origins);

    int tiles() const { return static_cast<int>(origins_.size()); }
    const std::vector<Dirn>& steps() const { return steps_; }
    Dirn step(int t) const;               // 1-based, 1 <= t <= tiles()-1
    GridPoint tile_origin(int t) const;   // lower-left corner, 1-based tile
    std::vector<GridEdge> tile_edges(int t) const;
    GridEdge shared_edge(int t) const;    // between tiles t and t+1
    std::vector<GridEdge> all_edges() const;
    std::vector<GridPoint> all_vertices() const;

    /// Tile adjacency conditions on the lattice (share an edge iff
    /// consecutive, at most a point two apart, disjoint three apart).
    bool geometry_valid() const;

  private:
    std::vector<Dirn> steps_;       // tiles()-1 entries
    std::vector<GridPoint> origins_;
};

/// Snake of the subchain: interior index i belongs to C exactly when tiles
/// i-1, i, i+1 run straight. First step is fixed east.
SnakeGraph snake_from_subchain(const AdmissibleSubchain& c);

SnakeGraph sub_snake(const SnakeGraph& g, int l, int r);

using PerfectMatching = std::vector<GridEdge>;  // sorted edge list

/// All perfect matchings, sorted lexicographically on their edge lists.
std::vector<PerfectMatching> enumerate_matchings(const SnakeGraph& g);

/// Independent matching count via the straight/bent interface recurrence.
unsigned long long count_matchings_transfer(const SnakeGraph& g);

struct HLetter {
    enum class Type : unsigned char { E, U1, U2 };
    Type type = Type::E;
    int i = 0;  // superscript, meaningful for U1/U2

    std::string str() const;
    bool operator==(const HLetter& o) const { return type == o.type && (type == Type::E || i == o.i); }
    bool operator<(const HLetter& o) const;
};

/// Word over the alphabet H_n; n-2 letters, letter t sits at position t.
struct HWord {
    int n = 0;
    std::vector<HLetter> letters;

    std::string str() const;  // "U2^1.U1^2.U1^3", "E" letters spelled "E"
    bool operator==(const HWord& o) const { return n == o.n && letters == o.letters; }
    bool operator<(const HWord& o) const;
};

/// The Dyck path in D_2n denoted by an alphabet letter.
DyckPath letter_path(const HLetter& sym, int n);

/// Read the H-word of a perfect matching of the subchain's full snake.
HWord word_from_matching(const PerfectMatching& p, const SnakeGraph& g, const AdmissibleSubchain& c);

/// X_C: words of all perfect matchings, in matching order.
std::vector<HWord> words_X_C(const AdmissibleSubchain& c);

/// [Y n X_C]: words of the support sub-snake matchings, E-padded outside;
/// distinct words only.
std::vector<HWord> restricted_words(const PeakPath& y, const AdmissibleSubchain& c);

}  // namespace dyckcat
