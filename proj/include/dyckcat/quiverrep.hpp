#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dyckcat/dyck.hpp"
#include "dyckcat/linalg.hpp"
#include "dyckcat/subchain.hpp"

namespace dyckcat {

/// Arrow direction on the edge between vertices s and s+1.
enum class EdgeDir : unsigned char { Left, Right };  // Right: arrow s -> s+1

/// A_m quiver given by the orientation of each diagram edge.
struct QuiverA {
    int m = 0;                       // number of vertices
    std::vector<EdgeDir> orientation;  // m-1 entries; edge s joins s and s+1

    EdgeDir edge(int s) const;  // 1-based, 1 <= s <= m-1
    bool arrow_between(int a, int b) const;  // directed arrow a -> b, |a-b| = 1
    std::vector<int> sinks() const;
    std::vector<int> sources() const;

    bool operator==(const QuiverA& o) const { return m == o.m && orientation == o.orientation; }
};

QuiverA quiver_from_subchain(const AdmissibleSubchain& c);

/// Representation of an A_m quiver: one space per vertex, one matrix per
/// edge, shaped dims[target] x dims[source].
struct RepA {
    QuiverA quiver;
    std::vector<int> dims;   // per vertex, index 0 = vertex 1
    std::vector<Mat> maps;   // per edge, index 0 = edge 1

    static RepA interval(const QuiverA& q, int l, int r);
    bool interval_support(int& l, int& r) const;  // true when dims is an interval indicator
};

RepA theta(const PeakPath& y, const AdmissibleSubchain& c);
PeakPath theta_inverse(const std::vector<int>& dims, const AdmissibleSubchain& c);

/// dim_k Hom(a, b) by exact rank of the intertwiner system.
int hom_dim_bruteforce(const RepA& a, const RepA& b);

/// Basis morphisms of Hom(a, b): each entry is one per-vertex matrix family.
std::vector<std::vector<Mat>> hom_basis(const RepA& a, const RepA& b);

/// Support interval of the projective / injective at vertex x (reachability).
std::pair<int, int> projective_interval(const QuiverA& q, int x);
std::pair<int, int> injective_interval(const QuiverA& q, int x);

/// Cartan matrix: column j is the dimension vector of P(j).
Mat cartan_matrix(const QuiverA& q);
/// Coxeter matrix sending dim M to dim tau(M) on non-projectives.
Mat coxeter_matrix(const QuiverA& q);

/// Dimension vector of tau(M) for the interval module with the given dims;
/// nullopt marks a projective hit. Throws invalid_input_error off intervals.
std::optional<std::vector<int>> coxeter_translate(const std::vector<int>& dims, const QuiverA& q);

/// All interval modules, ascending (l, r); m(m+1)/2 of them.
std::vector<RepA> indecomposables(const QuiverA& q);

/// Irreducible morphisms between interval modules, computed from scratch by
/// composing explicit Hom bases (no mesh structure assumed). Pairs of
/// intervals, each as ((l, r), (l', r')).
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> irreducible_arrows_bruteforce(
    const QuiverA& q);

}  // namespace dyckcat
