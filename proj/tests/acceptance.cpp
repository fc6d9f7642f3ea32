// Acceptance suite: prints one pass/fail line per criterion and exits
// nonzero when any of them fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dyckcat/bulk.hpp"
#include "dyckcat/cluster.hpp"
#include "dyckcat/nakayama.hpp"
#include "dyckcat/quiverrep.hpp"
#include "dyckcat/shiftcat.hpp"
#include "dyckcat/snake.hpp"

using namespace dyckcat;

namespace {

int failures = 0;

void report(int number, const char* name, bool ok, double ms) {
    std::printf("[%s] %d. %-58s (%.0f ms)\n", ok ? "PASS" : "FAIL", number, name, ms);
    if (!ok) ++failures;
}

void criterion(int number, const char* name, double budget_ms, const std::function<bool()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("       exception: %s\n", e.what());
        ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (budget_ms > 0 && ms > budget_ms) {
        std::printf("       time budget exceeded: %.0f ms > %.0f ms\n", ms, budget_ms);
        ok = false;
    }
    report(number, name, ok, ms);
}

std::set<std::string> canon_set(const std::vector<LaurentPoly>& ps) {
    std::set<std::string> out;
    for (const LaurentPoly& p : ps) out.insert(p.canonical_string());
    return out;
}

bool a2_ground_truth() {
    QuiverA q{2, {EdgeDir::Right}};  // 1 -> 2
    LaurentPoly one = LaurentPoly::constant(2, 1);
    LaurentPoly x1 = LaurentPoly::variable(2, 1);
    LaurentPoly x2 = LaurentPoly::variable(2, 2);
    std::vector<LaurentPoly> expect{x1, x2, (one + x2).exact_div(x1),
                                    (one + x1 + x2).exact_div(x1 * x2), (one + x1).exact_div(x2)};
    auto got = enumerate_cluster_variables(q);
    return got.size() == 5 && canon_set(got) == canon_set(expect);
}

bool worked_example() {
    AdmissibleSubchain c = parse_chain_spec(5, "j1,i2,j4");
    DyckPath y = DyckPath::parse("UDUUDUDDUD");
    auto run = peak_path_of(PairForm::decompose(y));
    if (!run) return false;

    LaurentPoly x1 = LaurentPoly::variable(4, 1), x2 = LaurentPoly::variable(4, 2),
                x3 = LaurentPoly::variable(4, 3), x4 = LaurentPoly::variable(4, 4);
    LaurentPoly expect = (x4 + x2 + x1 * x3 * x4).exact_div(x2 * x3);
    LaurentPoly got = cluster_var_from_dyck(*run, c);
    if (!(got == expect)) return false;
    if (got.canonical_string() != "(x4 + x2 + x1*x3*x4)/(x2*x3)") return false;

    std::set<std::string> words;
    for (const HWord& w : restricted_words(*run, c)) words.insert(w.str());
    return words == std::set<std::string>{"E.E.U1^3", "E.U2^2.E", "U2^1.U1^2.U1^3"};
}

bool headline_cross_validation() {
    bool all = true;
    for (const VerifyReport& r : bulk::verify_range(3, 8)) {
        if (!r.equal) {
            std::printf("       mismatch for chain %s\n", r.chain.spec_string().c_str());
            all = false;
        }
        size_t m = static_cast<size_t>(r.chain.n - 1);
        if (r.dyck_count != m * (m + 1) / 2 || r.mutation_count != m * (m + 1) / 2) all = false;
    }
    return all;
}

bool counting_suite() {
    bool ok = true;
    for (int n = 1; n <= 12; ++n) ok = ok && enumerate_dyck(n).size() == catalan(n);
    for (int n = 2; n <= 12; ++n)
        ok = ok && enumerate_peak_paths(n).size() == static_cast<size_t>(n) * (n - 1) / 2;
    for (int m = 1; m <= 7; ++m) {
        AdmissibleSubchain c = enumerate_subchains(m + 1).front();
        ok = ok && enumerate_cluster_variables(quiver_from_subchain(c)).size() ==
                       static_cast<size_t>(m) * (m + 3) / 2;
    }
    for (int n = 2; n <= 9; ++n)
        for (const AdmissibleSubchain& c : enumerate_subchains(n)) {
            SnakeGraph g = snake_from_subchain(c);
            size_t matchings = enumerate_matchings(g).size();
            ok = ok && matchings == count_matchings_transfer(g);
            if (n >= 3) {
                std::set<std::string> distinct;
                for (const HWord& w : words_X_C(c)) distinct.insert(w.str());
                ok = ok && distinct.size() == matchings;
            }
        }
    return ok;
}

bool hom_oracle_equivalence() {
    for (int n = 3; n <= 7; ++n)
        for (const AdmissibleSubchain& c : enumerate_subchains(n)) {
            auto crit = bulk::hom_table(c);
            auto dims = bulk::hom_dim_table(c);
            if (crit.size() != dims.size()) return false;
            for (size_t i = 0; i < crit.size(); ++i) {
                if (dims[i] < 0 || dims[i] > 1) return false;
                if (static_cast<int>(crit[i]) != dims[i]) return false;
            }
        }
    return true;
}

bool ar_quiver_structure() {
    AdmissibleSubchain c{6, {1, 3, 5}, {2, 4}};
    ARQuiver ar = ar_quiver(c);
    if (ar.vertices.size() != 15) return false;

    std::set<std::pair<int, int>> projs, injs;
    for (int x = 1; x <= 5; ++x) {
        PeakPath p = projective(x, c), i = injective(x, c);
        projs.insert({p.l, p.r});
        injs.insert({i.l, i.r});
    }
    if (projs.size() != 5 || injs.size() != 5) return false;
    if (ar.tau.size() != 10) return false;

    // Meshes commute.
    std::map<int, std::multiset<int>> in, out;
    for (auto [s, t] : ar.arrows) {
        in[t].insert(s);
        out[s].insert(t);
    }
    for (auto [v, w] : ar.tau) {
        if (in[v] != out[w]) return false;
        int len = 0;
        for (int e : in[v]) len += ar.vertices[e].r - ar.vertices[e].l + 1;
        if (len != (ar.vertices[v].r - ar.vertices[v].l + 1) +
                       (ar.vertices[w].r - ar.vertices[w].l + 1))
            return false;
    }

    // Acyclic arrow relation.
    std::vector<int> indeg(ar.vertices.size(), 0);
    std::multimap<int, int> adj;
    for (auto [s, t] : ar.arrows) {
        ++indeg[t];
        adj.emplace(s, t);
    }
    std::vector<int> stack;
    for (size_t v = 0; v < indeg.size(); ++v)
        if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
    size_t seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        auto range = adj.equal_range(v);
        for (auto it = range.first; it != range.second; ++it)
            if (--indeg[it->second] == 0) stack.push_back(it->second);
    }
    if (seen != ar.vertices.size()) return false;

    // tau from knitting equals the Coxeter transformation.
    QuiverA q = quiver_from_subchain(c);
    std::map<std::pair<int, int>, std::pair<int, int>> tau_knit;
    for (auto [v, w] : ar.tau)
        tau_knit[{ar.vertices[v].l, ar.vertices[v].r}] = {ar.vertices[w].l, ar.vertices[w].r};
    for (const PeakPath& y : ar.vertices) {
        std::vector<int> dims(5, 0);
        for (int i = y.l; i <= y.r; ++i) dims[i - 1] = 1;
        auto t = coxeter_translate(dims, q);
        bool is_proj = projs.count({y.l, y.r}) > 0;
        if (t.has_value() == is_proj) return false;
        if (t) {
            PeakPath img = theta_inverse(*t, c);
            if (tau_knit[{y.l, y.r}] != std::make_pair(img.l, img.r)) return false;
        }
    }
    return true;
}

bool nakayama_checks() {
    KupischSeries k{{3, 3, 2, 2, 1}};
    DyckPath p = dyck_from_kupisch(k);
    if (!(kupisch_from_dyck(p) == k)) return false;
    if (nv_objects(k).size() != 11) return false;
    ARQuiver ar = ar_quiver_nakayama(k);
    if (ar.vertices.size() != 11) return false;

    KupischSeries staircase{{5, 4, 3, 2, 1}};
    ARQuiver nak = ar_quiver_nakayama(staircase);
    ARQuiver lin = ar_quiver(AdmissibleSubchain{6, {5}, {1}});
    return nak.vertices == lin.vertices && nak.arrows == lin.arrows && nak.tau == lin.tau;
}

bool figure_level_checks() {
    if (letter_path(HLetter{HLetter::Type::U1, 1}, 3).steps() != "UUDDUD") return false;
    if (letter_path(HLetter{HLetter::Type::U2, 1}, 3).steps() != "UDUUDD") return false;
    if (letter_path(HLetter{HLetter::Type::E, 0}, 3).steps() != "UUUDDD") return false;

    SnakeGraph g = snake_from_subchain(AdmissibleSubchain{6, {1, 5}, {3}});
    std::string steps;
    for (Dirn d : g.steps()) steps.push_back(static_cast<char>(d));
    if (steps != "RUUR") return false;

    std::set<std::string> words;
    for (const HWord& w : words_X_C(AdmissibleSubchain{3, {1}, {2}})) words.insert(w.str());
    return words == std::set<std::string>{"E", "U1^1", "U2^1"};
}

}  // namespace

int main() {
    criterion(1, "A2 ground truth: the five cluster variables", 1000, a2_ground_truth);
    criterion(2, "worked example: chain j1,i2,j4 with Y=UDUUDUDDUD", 1000, worked_example);
    criterion(3, "cross-validation: formula vs mutation, all chains n<=8", 300000,
              headline_cross_validation);
    criterion(4, "counting suite: Catalan, triangular, m(m+3)/2, |X_C|", 0, counting_suite);
    criterion(5, "Hom criterion vs brute force on SxS, all chains n<=7", 0, hom_oracle_equivalence);
    criterion(6, "AR quiver structure for the five-vertex zigzag quiver", 0, ar_quiver_structure);
    criterion(7, "Nakayama: series round-trip, 11 objects, staircase", 0, nakayama_checks);
    criterion(8, "figure-level checks: H_3, snake steps, X_{1,2}", 0, figure_level_checks);

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
