#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckcat/errors.hpp"

namespace dyckcat {

/// A balanced U/D word whose every prefix has at least as many U as D.
/// Immutable after construction; the text form is the step string itself.
class DyckPath {
  public:
    static bool is_valid(std::string_view steps);
    static DyckPath parse(std::string_view steps);

    int half_length() const { return static_cast<int>(steps_.size() / 2); }
    const std::string& steps() const { return steps_; }

    int peak_count() const;

    bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
    bool operator<(const DyckPath& o) const { return steps_ < o.steps_; }

  private:
    explicit DyckPath(std::string steps) : steps_(std::move(steps)) {}
    std::string steps_;
};

/// Inner letter pair w_i = y_{2i} y_{2i+1} of a length-2n Dyck word.
enum class Pair : unsigned char { UD, DU, UU, DD };

Pair reverse_pair(Pair p);
const char* pair_text(Pair p);

/// Decomposition U w_1 ... w_{n-1} D. Index i is 1-based throughout.
class PairForm {
  public:
    static PairForm decompose(const DyckPath& p);
    PairForm(int n, std::vector<Pair> pairs);

    int n() const { return n_; }
    Pair pair(int i) const;
    const std::vector<Pair>& pairs() const { return pairs_; }

    DyckPath reassemble() const;
    bool reassembles_valid() const;

    /// Indices q with w_q = UD or UU.
    std::vector<int> support() const;

    /// (l, r) when the pairs are one contiguous UD run with DU elsewhere.
    std::optional<std::pair<int, int>> peak_run() const;

    /// Reverse pair i. Throws invalid_shift_error when the result leaves
    /// the set of Dyck words.
    PairForm unitary_shift(int i) const;

    bool operator==(const PairForm& o) const { return n_ == o.n_ && pairs_ == o.pairs_; }

  private:
    int n_;
    std::vector<Pair> pairs_;
};

/// Member of S (exactly n-1 peaks): the unique path with UD run on [l, r].
struct PeakPath {
    int n = 0;
    int l = 0;
    int r = 0;

    PairForm pair_form() const;
    DyckPath path() const;

    bool operator==(const PeakPath& o) const { return n == o.n && l == o.l && r == o.r; }
    bool operator<(const PeakPath& o) const;
};

std::optional<PeakPath> peak_path_of(const PairForm& pf);

unsigned long long catalan(int n);

int default_enum_bound();

/// All Dyck paths of length 2n in lexicographic step order ('D' < 'U').
std::vector<DyckPath> enumerate_dyck(int n, int bound = default_enum_bound());

/// All of S for the given n, ascending (l, r).
std::vector<PeakPath> enumerate_peak_paths(int n);

}  // namespace dyckcat
