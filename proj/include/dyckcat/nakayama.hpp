#pragma once

#include <vector>

#include "dyckcat/dyck.hpp"
#include "dyckcat/shiftcat.hpp"

namespace dyckcat {

/// Kupisch series of a linear Nakayama algebra: c_m = 1, c_{i+1} >= c_i - 1,
/// 1 <= c_i <= m - i + 1. The quiver runs 1 -> 2 -> ... -> m.
struct KupischSeries {
    std::vector<int> c;

    int size() const { return static_cast<int>(c.size()); }
    bool valid() const;
    void require_valid() const;

    bool operator==(const KupischSeries& o) const { return c == o.c; }
};

/// Projective bounds m(i, j_i) and the partition vector v derived from a
/// Kupisch series.
struct NvSpec {
    int n = 0;
    std::vector<int> bound;      // m(i, j_i) = c_i
    std::vector<int> partition;  // v_i = n - (c_i + i - 1)
};

NvSpec nv_spec(const KupischSeries& k);

/// Staircase encoding: the path of semilength m crossing column i at height
/// c_i + i - 1. Round-trips with kupisch_from_dyck.
DyckPath dyck_from_kupisch(const KupischSeries& k);
KupischSeries kupisch_from_dyck(const DyckPath& p);

/// Interval objects of the subcategory: peak paths (l = i, r) in S_{n+1}
/// with i <= r <= c_i + i - 1.
std::vector<PeakPath> nv_objects(const NvSpec& spec);
std::vector<PeakPath> nv_objects(const KupischSeries& k);

/// Auslander-Reiten quiver of the Nakayama algebra, knitted inside the
/// subcategory (arrows and tau recomputed there).
ARQuiver ar_quiver_nakayama(const KupischSeries& k);

}  // namespace dyckcat
