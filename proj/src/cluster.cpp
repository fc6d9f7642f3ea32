#include "dyckcat/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace dyckcat {

bool ExchangeMatrix::skew_symmetric() const {
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

ExchangeMatrix b_matrix_from_quiver(const QuiverA& q) {
    ExchangeMatrix b;
    b.m = q.m;
    b.b.assign(static_cast<size_t>(q.m) * q.m, 0);
    for (int s = 1; s <= q.m - 1; ++s) {
        if (q.edge(s) == EdgeDir::Right) {
            b.at(s, s + 1) = 1;
            b.at(s + 1, s) = -1;
        } else {
            b.at(s, s + 1) = -1;
            b.at(s + 1, s) = 1;
        }
    }
    return b;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
    if (k < 1 || k > b.m) throw invalid_input_error("mutation index out of range");
    ExchangeMatrix out = b;
    for (int i = 1; i <= b.m; ++i)
        for (int j = 1; j <= b.m; ++j) {
            if (i == k || j == k) {
                out.at(i, j) = -b.at(i, j);
            } else if (b.at(i, k) > 0 && b.at(k, j) > 0) {
                out.at(i, j) = b.at(i, j) + b.at(i, k) * b.at(k, j);
            } else if (b.at(i, k) < 0 && b.at(k, j) < 0) {
                out.at(i, j) = b.at(i, j) - b.at(i, k) * b.at(k, j);
            } else {
                out.at(i, j) = b.at(i, j);
            }
        }
    return out;
}

Seed initial_seed(const QuiverA& q) {
    Seed s;
    s.matrix = b_matrix_from_quiver(q);
    for (int i = 1; i <= q.m; ++i) s.cluster.push_back(LaurentPoly::variable(q.m, i));
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    int m = s.matrix.m;
    if (k < 1 || k > m) throw invalid_input_error("mutation index out of range");
    LaurentPoly pos = LaurentPoly::constant(m, 1);
    LaurentPoly neg = LaurentPoly::constant(m, 1);
    for (int i = 1; i <= m; ++i) {
        int bik = s.matrix.at(i, k);
        if (bik > 0) pos = pos * s.cluster[i - 1].pow(bik);
        if (bik < 0) neg = neg * s.cluster[i - 1].pow(-bik);
    }
    Seed out;
    out.matrix = mutate_matrix(s.matrix, k);
    out.cluster = s.cluster;
    out.cluster[k - 1] = (pos + neg).exact_div(s.cluster[k - 1]);
    return out;
}

std::size_t default_seed_cap() {
    if (const char* env = std::getenv("DYCKCAT_SEED_CAP")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

namespace {

std::string seed_key(const Seed& s) {
    std::vector<std::string> parts;
    parts.reserve(s.cluster.size());
    for (const LaurentPoly& p : s.cluster) parts.push_back(p.canonical_string());
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    for (const std::string& p : parts) os << p << '|';
    return os.str();
}

}  // namespace

std::vector<LaurentPoly> enumerate_cluster_variables(const QuiverA& q, std::size_t cap) {
    Seed start = initial_seed(q);
    std::set<std::string> seen_seeds{seed_key(start)};
    std::map<std::string, LaurentPoly> vars;
    for (const LaurentPoly& p : start.cluster) vars.emplace(p.canonical_string(), p);

    std::deque<Seed> frontier{start};
    while (!frontier.empty()) {
        Seed s = std::move(frontier.front());
        frontier.pop_front();
        for (int k = 1; k <= q.m; ++k) {
            Seed next = mutate_seed(s, k);
            if (!seen_seeds.insert(seed_key(next)).second) continue;
            if (seen_seeds.size() > cap) throw size_error("seed exploration cap exceeded");
            for (const LaurentPoly& p : next.cluster) vars.emplace(p.canonical_string(), p);
            frontier.push_back(std::move(next));
        }
    }
    std::vector<LaurentPoly> out;
    out.reserve(vars.size());
    for (auto& [key, p] : vars) out.push_back(std::move(p));
    return out;
}

LaurentPoly eta(const PeakPath& y) {
    int m = y.n - 1;
    Expo e(m, 0);
    for (int i = y.l; i <= y.r; ++i) e[i - 1] = 1;
    return LaurentPoly::monomial(std::move(e));
}

LaurentPoly word_monomial(const HWord& v) {
    int m = v.n - 1;
    Expo e(m, 0);
    for (const HLetter& sym : v.letters) {
        if (sym.type == HLetter::Type::U1) e[sym.i] += 1;       // x_{i+1}
        else if (sym.type == HLetter::Type::U2) e[sym.i - 1] += 1;  // x_i
    }
    return LaurentPoly::monomial(std::move(e));
}

LaurentPoly cluster_var_from_dyck(const PeakPath& y, const AdmissibleSubchain& c) {
    c.require_valid();
    if (y.n != c.n) throw invalid_input_error("peak path and subchain disagree on n");
    int m = c.n - 1;
    LaurentPoly sum = LaurentPoly::zero(m);
    if (c.n >= 3) {
        for (const HWord& w : restricted_words(y, c)) sum = sum + word_monomial(w);
    } else {
        // n = 2: the single tile has two matchings and both read as the
        // empty word, each contributing 1.
        sum = LaurentPoly::constant(m, 2);
    }
    return sum.exact_div(eta(y));
}

VerifyReport verify_bijection(const AdmissibleSubchain& c, std::size_t cap) {
    c.require_valid();
    VerifyReport rep;
    rep.chain = c;

    std::map<std::string, LaurentPoly> dyck_vars;
    for (const PeakPath& y : enumerate_peak_paths(c.n)) {
        LaurentPoly v = cluster_var_from_dyck(y, c);
        dyck_vars.emplace(v.canonical_string(), v);
    }
    rep.dyck_count = dyck_vars.size();

    QuiverA q = quiver_from_subchain(c);
    std::set<std::string> initial;
    for (int i = 1; i <= q.m; ++i) initial.insert(LaurentPoly::variable(q.m, i).canonical_string());
    std::set<std::string> engine_vars;
    for (const LaurentPoly& p : enumerate_cluster_variables(q, cap)) {
        std::string key = p.canonical_string();
        if (!initial.count(key)) engine_vars.insert(key);
    }
    rep.mutation_count = engine_vars.size();

    for (const std::string& key : engine_vars)
        if (!dyck_vars.count(key)) rep.missing.push_back(key);
    for (const auto& [key, p] : dyck_vars)
        if (!engine_vars.count(key)) rep.extra.push_back(key);
    rep.equal = rep.missing.empty() && rep.extra.empty();
    return rep;
}

}  // namespace dyckcat
