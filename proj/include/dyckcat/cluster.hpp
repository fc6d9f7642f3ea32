#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dyckcat/laurent.hpp"
#include "dyckcat/quiverrep.hpp"
#include "dyckcat/snake.hpp"

namespace dyckcat {

/// Skew-symmetric exchange matrix.
struct ExchangeMatrix {
    int m = 0;
    std::vector<int> b;  // row-major m*m

    int at(int i, int j) const { return b[static_cast<size_t>(i - 1) * m + (j - 1)]; }  // 1-based
    int& at(int i, int j) { return b[static_cast<size_t>(i - 1) * m + (j - 1)]; }
    bool skew_symmetric() const;
    bool operator==(const ExchangeMatrix& o) const { return m == o.m && b == o.b; }
};

ExchangeMatrix b_matrix_from_quiver(const QuiverA& q);

/// Matrix mutation in direction k (1-based); an involution.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

struct Seed {
    ExchangeMatrix matrix;
    std::vector<LaurentPoly> cluster;
};

Seed initial_seed(const QuiverA& q);

/// Exchange at k: x_k' = (prod_{b_ik>0} x_i^{b_ik} + prod_{b_ik<0} x_i^{-b_ik}) / x_k,
/// empty products equal 1.
Seed mutate_seed(const Seed& s, int k);

std::size_t default_seed_cap();

/// Breadth-first closure of the initial seed under all mutations; returns
/// every distinct cluster variable, sorted by canonical string.
std::vector<LaurentPoly> enumerate_cluster_variables(const QuiverA& q,
                                                     std::size_t cap = default_seed_cap());

/// Support monomial of a peak path.
LaurentPoly eta(const PeakPath& y);

/// Product of x_m over the letters: U1^i -> x_{i+1}, U2^i -> x_i, E -> 1.
LaurentPoly word_monomial(const HWord& v);

/// The Dyck-path cluster-variable formula: word monomials of the support
/// sub-snake matchings summed and divided by eta(y).
LaurentPoly cluster_var_from_dyck(const PeakPath& y, const AdmissibleSubchain& c);

struct VerifyReport {
    AdmissibleSubchain chain;
    std::size_t dyck_count = 0;
    std::size_t mutation_count = 0;  // non-initial variables
    bool equal = false;
    std::vector<std::string> missing;  // mutation-engine variables the formula missed
    std::vector<std::string> extra;    // formula outputs the engine never produced
};

/// Compare the Dyck-path formula against the mutation engine on one chain.
VerifyReport verify_bijection(const AdmissibleSubchain& c, std::size_t cap = default_seed_cap());

}  // namespace dyckcat
