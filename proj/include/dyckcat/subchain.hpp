#pragma once

#include <string>
#include <vector>

#include "dyckcat/errors.hpp"

namespace dyckcat {

/// Alternating sink/source index chain inside {1, ..., n-1}. Determines an
/// orientation of the A_{n-1} diagram: between consecutive chain members the
/// arrows point toward the sink end.
struct AdmissibleSubchain {
    int n = 0;                 // category parameter; indices live in 1..n-1
    std::vector<int> sinks;    // ascending (the i_t)
    std::vector<int> sources;  // ascending (the j_t)

    bool valid() const;
    void require_valid() const;

    /// Chain members merged ascending.
    std::vector<int> members() const;
    bool is_sink(int x) const;
    bool is_source(int x) const;

    /// Round-trips with parse_chain_spec: "j1,i2,j4".
    std::string spec_string() const;

    bool operator==(const AdmissibleSubchain& o) const {
        return n == o.n && sinks == o.sinks && sources == o.sources;
    }
};

/// Parse "j1,i2,j4" style role+index tokens. Throws invalid_input_error on
/// bad grammar or an inadmissible chain.
AdmissibleSubchain parse_chain_spec(int n, const std::string& spec);

/// Every admissible subchain for the given n (one per orientation of
/// A_{n-1}; 2^(n-2) of them), deterministic order.
std::vector<AdmissibleSubchain> enumerate_subchains(int n);

}  // namespace dyckcat
