#pragma once

#include <cstdint>
#include <vector>

#include "dyckcat/cluster.hpp"
#include "dyckcat/shiftcat.hpp"

namespace dyckcat {
namespace bulk {

// OpenMP-parallel batch kernels. Each has a _serial reference twin used by
// the tests and the benchmark; outputs must match exactly.

/// |S| x |S| table of the Hom criterion, row-major over enumerate_peak_paths.
std::vector<std::uint8_t> hom_table(const AdmissibleSubchain& c);
std::vector<std::uint8_t> hom_table_serial(const AdmissibleSubchain& c);

/// Same table from the brute-force linear-algebra oracle (entries are dims).
std::vector<int> hom_dim_table(const AdmissibleSubchain& c);
std::vector<int> hom_dim_table_serial(const AdmissibleSubchain& c);

/// verify_bijection over every admissible subchain with nmin <= n <= nmax.
std::vector<VerifyReport> verify_range(int nmin, int nmax,
                                       std::size_t cap = default_seed_cap());
std::vector<VerifyReport> verify_range_serial(int nmin, int nmax,
                                              std::size_t cap = default_seed_cap());

/// Perfect-matching count of every subchain snake for the given n, by
/// explicit enumeration (the transfer recurrence stays the cross-check).
std::vector<unsigned long long> matching_counts(int n);
std::vector<unsigned long long> matching_counts_serial(int n);

}  // namespace bulk
}  // namespace dyckcat
