#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dyckcat/dyck.hpp"
#include "dyckcat/quiverrep.hpp"
#include "dyckcat/subchain.hpp"

namespace dyckcat {

/// One elementary shift: a composition of unitary pair reversals carrying
/// source to target with every intermediate word a valid Dyck path.
/// kind is Left when the left end of the peak run moves, Right otherwise.
/// An object admits at most one shift of each kind; the flipped index sets
/// of the two kinds can meet when both ends shrink across a shared sink.
struct ShiftArrow {
    enum class Kind : unsigned char { Left, Right };
    PeakPath source;
    PeakPath target;
    Kind kind;
    std::vector<int> composition;  // unitary shift indices in application order
};

bool validate_subchain(const AdmissibleSubchain& c);

/// Theorem-style Hom criterion on S: supports intersect and the first/last
/// support indices compare the right way on every chain interval that
/// contains a common support point.
bool hom_nonzero(const PeakPath& y1, const PeakPath& y2, const AdmissibleSubchain& c);

/// Support interval of the (unique up to scalar) nonzero morphism y1 -> y2:
/// the vertices where its components are nonzero. Empty when Hom vanishes.
std::optional<std::pair<int, int>> hom_window(const PeakPath& y1, const PeakPath& y2,
                                              const AdmissibleSubchain& c);

PeakPath simple(int x, const AdmissibleSubchain& c);
PeakPath projective(int x, const AdmissibleSubchain& c);
PeakPath injective(int x, const AdmissibleSubchain& c);

/// Elementary shifts out of y that stay inside S: the irreducible arrows,
/// at most one Left and one Right.
std::vector<ShiftArrow> es_successors(const PeakPath& y, const AdmissibleSubchain& c);

struct ARQuiver {
    int n = 0;
    std::vector<PeakPath> vertices;             // ascending (l, r)
    std::vector<std::pair<int, int>> arrows;    // 0-based positions into vertices
    std::vector<std::pair<int, int>> tau;       // (vertex, tau vertex), non-projectives only
};

/// Auslander-Reiten quiver on S, knitted from the projectives by mesh
/// additivity (independent of the Coxeter matrix).
ARQuiver ar_quiver(const AdmissibleSubchain& c);

bool connected(const AdmissibleSubchain& c);

}  // namespace dyckcat
