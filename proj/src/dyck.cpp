#include "dyckcat/dyck.hpp"

#include <algorithm>
#include <cstdlib>

namespace dyckcat {

bool DyckPath::is_valid(std::string_view steps) {
    if (steps.size() % 2 != 0 || steps.empty())
        throw invalid_input_error("Dyck word must have positive even length");
    int height = 0;
    for (char c : steps) {
        if (c == 'U')
            ++height;
        else if (c == 'D')
            --height;
        else
            throw invalid_input_error(std::string("foreign symbol '") + c + "' in Dyck word");
        if (height < 0) return false;
    }
    return height == 0;
}

DyckPath DyckPath::parse(std::string_view steps) {
    if (!is_valid(steps)) throw invalid_input_error("not a Dyck word: " + std::string(steps));
    return DyckPath(std::string(steps));
}

int DyckPath::peak_count() const {
    int peaks = 0;
    for (size_t i = 0; i + 1 < steps_.size(); ++i)
        if (steps_[i] == 'U' && steps_[i + 1] == 'D') ++peaks;
    return peaks;
}

Pair reverse_pair(Pair p) {
    switch (p) {
        case Pair::UD: return Pair::DU;
        case Pair::DU: return Pair::UD;
        case Pair::UU: return Pair::DD;
        case Pair::DD: return Pair::UU;
    }
    throw internal_error("bad Pair");
}

const char* pair_text(Pair p) {
    switch (p) {
        case Pair::UD: return "UD";
        case Pair::DU: return "DU";
        case Pair::UU: return "UU";
        case Pair::DD: return "DD";
    }
    throw internal_error("bad Pair");
}

static Pair pair_of(char a, char b) {
    if (a == 'U') return b == 'D' ? Pair::UD : Pair::UU;
    return b == 'U' ? Pair::DU : Pair::DD;
}

PairForm PairForm::decompose(const DyckPath& p) {
    const std::string& s = p.steps();
    int n = p.half_length();
    std::vector<Pair> pairs;
    pairs.reserve(n - 1);
    // w_i = y_{2i} y_{2i+1}, 1-based positions; y_1 = U and y_{2n} = D stay outside.
    for (int i = 1; i <= n - 1; ++i) pairs.push_back(pair_of(s[2 * i - 1], s[2 * i]));
    return PairForm(n, std::move(pairs));
}

PairForm::PairForm(int n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
    if (n_ < 1 || static_cast<int>(pairs_.size()) != n_ - 1)
        throw invalid_input_error("pair form needs exactly n-1 pairs");
}

Pair PairForm::pair(int i) const {
    if (i < 1 || i > n_ - 1) throw invalid_input_error("pair index out of range");
    return pairs_[i - 1];
}

DyckPath PairForm::reassemble() const {
    std::string s;
    s.reserve(2 * n_);
    s.push_back('U');
    for (Pair p : pairs_) s.append(pair_text(p));
    s.push_back('D');
    return DyckPath::parse(s);
}

bool PairForm::reassembles_valid() const {
    std::string s;
    s.reserve(2 * n_);
    s.push_back('U');
    for (Pair p : pairs_) s.append(pair_text(p));
    s.push_back('D');
    return DyckPath::is_valid(s);
}

std::vector<int> PairForm::support() const {
    std::vector<int> out;
    for (int i = 1; i <= n_ - 1; ++i)
        if (pairs_[i - 1] == Pair::UD || pairs_[i - 1] == Pair::UU) out.push_back(i);
    return out;
}

std::optional<std::pair<int, int>> PairForm::peak_run() const {
    int l = 0, r = 0;
    for (int i = 1; i <= n_ - 1; ++i) {
        Pair p = pairs_[i - 1];
        if (p == Pair::UU || p == Pair::DD) return std::nullopt;
        if (p == Pair::UD) {
            if (l == 0)
                l = r = i;
            else if (i == r + 1)
                r = i;
            else
                return std::nullopt;  // second run
        }
    }
    if (l == 0) return std::nullopt;
    return std::make_pair(l, r);
}

PairForm PairForm::unitary_shift(int i) const {
    if (i < 1 || i > n_ - 1) throw invalid_input_error("shift index out of range");
    std::vector<Pair> out = pairs_;
    out[i - 1] = reverse_pair(out[i - 1]);
    PairForm shifted(n_, std::move(out));
    if (!shifted.reassembles_valid())
        throw invalid_shift_error("unitary shift f_" + std::to_string(i) + " leaves the Dyck words");
    return shifted;
}

PairForm PeakPath::pair_form() const {
    std::vector<Pair> pairs(n - 1, Pair::DU);
    for (int i = l; i <= r; ++i) pairs[i - 1] = Pair::UD;
    return PairForm(n, std::move(pairs));
}

DyckPath PeakPath::path() const { return pair_form().reassemble(); }

bool PeakPath::operator<(const PeakPath& o) const {
    if (n != o.n) return n < o.n;
    if (l != o.l) return l < o.l;
    return r < o.r;
}

std::optional<PeakPath> peak_path_of(const PairForm& pf) {
    auto run = pf.peak_run();
    if (!run) return std::nullopt;
    return PeakPath{pf.n(), run->first, run->second};
}

unsigned long long catalan(int n) {
    // C(n) = binom(2n, n) / (n + 1), exact at every step.
    unsigned long long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

int default_enum_bound() {
    if (const char* env = std::getenv("DYCKCAT_MAX_ENUM_N")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 14;
}

static void gen_dyck(std::string& cur, int ups, int downs, int n, std::vector<DyckPath>& out) {
    if (static_cast<int>(cur.size()) == 2 * n) {
        out.push_back(DyckPath::parse(cur));
        return;
    }
    // 'D' before 'U' yields ascending lexicographic order.
    if (downs < ups) {
        cur.push_back('D');
        gen_dyck(cur, ups, downs + 1, n, out);
        cur.pop_back();
    }
    if (ups < n) {
        cur.push_back('U');
        gen_dyck(cur, ups + 1, downs, n, out);
        cur.pop_back();
    }
}

std::vector<DyckPath> enumerate_dyck(int n, int bound) {
    if (n < 1) throw invalid_input_error("n must be positive");
    if (n > bound)
        throw size_error("enumeration bound exceeded: n = " + std::to_string(n) + " > " +
                         std::to_string(bound));
    std::vector<DyckPath> out;
    if (n <= 20) out.reserve(catalan(n));
    std::string cur;
    cur.reserve(2 * n);
    gen_dyck(cur, 0, 0, n, out);
    return out;
}

std::vector<PeakPath> enumerate_peak_paths(int n) {
    if (n < 2) throw invalid_input_error("S requires n >= 2");
    std::vector<PeakPath> out;
    out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int l = 1; l <= n - 1; ++l)
        for (int r = l; r <= n - 1; ++r) out.push_back(PeakPath{n, l, r});
    return out;
}

}  // namespace dyckcat
