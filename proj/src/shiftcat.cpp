#include "dyckcat/shiftcat.hpp"

#include <algorithm>

namespace dyckcat {

bool validate_subchain(const AdmissibleSubchain& c) { return c.valid(); }

namespace {

void check_pair(const PeakPath& y1, const PeakPath& y2, const AdmissibleSubchain& c) {
    c.require_valid();
    if (y1.n != c.n || y2.n != c.n) throw invalid_input_error("peak paths and subchain disagree on n");
    auto ok = [&](const PeakPath& y) { return 1 <= y.l && y.l <= y.r && y.r <= y.n - 1; };
    if (!ok(y1) || !ok(y2)) throw invalid_input_error("peak path out of range");
}

}  // namespace

bool hom_nonzero(const PeakPath& w, const PeakPath& v, const AdmissibleSubchain& c) {
    check_pair(w, v, c);
    int lo = std::max(w.l, v.l), hi = std::min(w.r, v.r);
    if (lo > hi) return false;  // disjoint supports
    std::vector<int> mem = c.members();
    for (size_t t = 0; t + 1 < mem.size(); ++t) {
        int a = mem[t], b = mem[t + 1];
        if (std::max(a, lo) > std::min(b, hi)) continue;  // no common support point here
        // First and last support indices of each path inside [a, b].
        int pw = std::max(a, w.l), bw = std::min(b, w.r);
        int pv = std::max(a, v.l), bv = std::min(b, v.r);
        if (c.is_sink(a)) {
            if (!(pw <= pv && bw <= bv)) return false;
        } else {
            if (!(pw >= pv && bw >= bv)) return false;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> hom_window(const PeakPath& w, const PeakPath& v,
                                              const AdmissibleSubchain& c) {
    check_pair(w, v, c);
    QuiverA q = quiver_from_subchain(c);
    int lo = std::max(w.l, v.l), hi = std::min(w.r, v.r);
    std::optional<std::pair<int, int>> found;
    for (int a = lo; a <= hi; ++a) {
        // [a, b] must be a quotient image of w and a submodule of v.
        bool qa = a == w.l || q.edge(a - 1) == EdgeDir::Left;
        bool sa = a == v.l || q.edge(a - 1) == EdgeDir::Right;
        if (!qa || !sa) continue;
        for (int b = a; b <= hi; ++b) {
            bool qb = b == w.r || q.edge(b) == EdgeDir::Right;
            bool sb = b == v.r || q.edge(b) == EdgeDir::Left;
            if (!qb || !sb) continue;
            if (found) throw internal_error("two morphism windows between intervals");
            found = std::make_pair(a, b);
        }
    }
    return found;
}

PeakPath simple(int x, const AdmissibleSubchain& c) {
    c.require_valid();
    if (x < 1 || x > c.n - 1) throw invalid_input_error("vertex out of range");
    return PeakPath{c.n, x, x};
}

PeakPath projective(int x, const AdmissibleSubchain& c) {
    c.require_valid();
    auto [l, r] = projective_interval(quiver_from_subchain(c), x);
    return PeakPath{c.n, l, r};
}

PeakPath injective(int x, const AdmissibleSubchain& c) {
    c.require_valid();
    auto [l, r] = injective_interval(quiver_from_subchain(c), x);
    return PeakPath{c.n, l, r};
}

namespace {

std::vector<int> block_flips(const PeakPath& y, const PeakPath& t) {
    // Exactly one endpoint moves; flip the block so every intermediate stays
    // in S (grow outward one pair at a time, shrink inward from the old end).
    std::vector<int> comp;
    if (y.l == t.l) {
        if (t.r > y.r)
            for (int i = y.r + 1; i <= t.r; ++i) comp.push_back(i);
        else
            for (int i = y.r; i > t.r; --i) comp.push_back(i);
    } else if (y.r == t.r) {
        if (t.l < y.l)
            for (int i = y.l - 1; i >= t.l; --i) comp.push_back(i);
        else
            for (int i = y.l; i < t.l; ++i) comp.push_back(i);
    } else {
        throw internal_error("elementary shift moves both run endpoints");
    }
    return comp;
}

}  // namespace

std::vector<ShiftArrow> es_successors(const PeakPath& y, const AdmissibleSubchain& c) {
    check_pair(y, y, c);
    std::vector<PeakPath> all = enumerate_peak_paths(c.n);

    // Cache windows out of y and between candidate intermediates.
    auto overlap = [](std::pair<int, int> a, std::pair<int, int> b) {
        return std::max(a.first, b.first) <= std::min(a.second, b.second);
    };

    std::vector<ShiftArrow> out;
    for (const PeakPath& t : all) {
        if (t == y) continue;
        auto wyt = hom_window(y, t, c);
        if (!wyt) continue;
        // y -> t is an arrow unless it factors with nonzero composite
        // through a third indecomposable; composites multiply component-wise,
        // so nonvanishing means the two windows meet.
        bool factors = false;
        for (const PeakPath& x : all) {
            if (x == y || x == t) continue;
            auto w1 = hom_window(y, x, c);
            if (!w1) continue;
            auto w2 = hom_window(x, t, c);
            if (!w2) continue;
            if (overlap(*w1, *w2)) {
                factors = true;
                break;
            }
        }
        if (factors) continue;
        ShiftArrow arrow;
        arrow.source = y;
        arrow.target = t;
        arrow.kind = (y.l == t.l) ? ShiftArrow::Kind::Right : ShiftArrow::Kind::Left;
        arrow.composition = block_flips(y, t);
        out.push_back(std::move(arrow));
    }
    if (out.size() > 2) throw internal_error("more than two elementary shifts out of one object");
    if (out.size() == 2 && out[0].kind == out[1].kind)
        throw internal_error("two elementary shifts of the same kind");
    std::sort(out.begin(), out.end(),
              [](const ShiftArrow& a, const ShiftArrow& b) { return a.target < b.target; });
    return out;
}

namespace {

struct KnitModule {
    int l = 0, r = 0;
    bool projective = false;
    bool injective = false;
    std::vector<int> in;  // finalized in-arrow sources (module ids)
    bool in_final = false;
    int tau_inv = -1;
    int tau = -1;
};

}  // namespace

ARQuiver ar_quiver(const AdmissibleSubchain& c) {
    c.require_valid();
    int n = c.n, m = n - 1;
    QuiverA q = quiver_from_subchain(c);

    ARQuiver ar;
    ar.n = n;
    ar.vertices = enumerate_peak_paths(n);
    auto id_of = [&](int l, int r) { return (l - 1) * (m + 1) - l * (l - 1) / 2 + (r - l); };

    std::vector<KnitModule> mod(ar.vertices.size());
    for (size_t i = 0; i < ar.vertices.size(); ++i) {
        mod[i].l = ar.vertices[i].l;
        mod[i].r = ar.vertices[i].r;
    }
    std::vector<int> proj_of(m + 1), inj_of(m + 1);
    for (int x = 1; x <= m; ++x) {
        auto [pl, pr] = projective_interval(q, x);
        proj_of[x] = id_of(pl, pr);
        mod[proj_of[x]].projective = true;
        auto [il, ir] = injective_interval(q, x);
        inj_of[x] = id_of(il, ir);
        mod[inj_of[x]].injective = true;
    }
    // Arrows between projectives: P(x) -> P(y) for each quiver arrow y -> x.
    for (int s = 1; s <= m - 1; ++s) {
        int from = q.edge(s) == EdgeDir::Right ? s : s + 1;
        int to = q.edge(s) == EdgeDir::Right ? s + 1 : s;
        mod[proj_of[from]].in.push_back(proj_of[to]);
    }
    for (int x = 1; x <= m; ++x) mod[proj_of[x]].in_final = true;

    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t w = 0; w < mod.size(); ++w) {
            KnitModule& W = mod[w];
            if (W.injective || W.tau_inv >= 0 || !W.in_final) continue;
            bool ready = true;
            for (int x : W.in)
                if (!mod[x].injective && mod[x].tau_inv < 0) ready = false;
            if (!ready) continue;

            // Targets of W: projective targets plus tau-inverse of the
            // non-injective sources feeding W (mesh rule).
            std::vector<int> targets;
            if (W.projective) {
                int px = 0;
                for (int x = 1; x <= m; ++x)
                    if (proj_of[x] == static_cast<int>(w)) px = x;
                for (int y = 1; y <= m; ++y)
                    if (std::abs(y - px) == 1 && q.arrow_between(y, px)) targets.push_back(proj_of[y]);
            }
            for (int x : W.in)
                if (!mod[x].injective) targets.push_back(mod[x].tau_inv);

            std::vector<int> dsum(m + 2, 0);
            for (int t : targets)
                for (int v = mod[t].l; v <= mod[t].r; ++v) ++dsum[v];
            for (int v = W.l; v <= W.r; ++v) --dsum[v];
            int nl = 0, nr = 0;
            for (int v = 1; v <= m; ++v) {
                if (dsum[v] < 0 || dsum[v] > 1) throw internal_error("mesh sum not an interval");
                if (dsum[v] == 1) {
                    if (nl == 0)
                        nl = nr = v;
                    else if (v == nr + 1)
                        nr = v;
                    else
                        throw internal_error("mesh sum not an interval");
                }
            }
            if (nl == 0) throw internal_error("mesh sum vanished");
            int nid = id_of(nl, nr);
            W.tau_inv = nid;
            mod[nid].tau = static_cast<int>(w);
            mod[nid].in = targets;
            mod[nid].in_final = true;
            progress = true;
        }
    }
    for (size_t i = 0; i < mod.size(); ++i) {
        if (!mod[i].injective && mod[i].tau_inv < 0) throw internal_error("knitting left a module open");
        if (!mod[i].projective && mod[i].tau < 0) throw internal_error("non-projective without tau");
    }

    for (size_t v = 0; v < mod.size(); ++v)
        for (int x : mod[v].in) ar.arrows.emplace_back(x, static_cast<int>(v));
    std::sort(ar.arrows.begin(), ar.arrows.end());
    for (size_t v = 0; v < mod.size(); ++v)
        if (mod[v].tau >= 0) ar.tau.emplace_back(static_cast<int>(v), mod[v].tau);
    return ar;
}

bool connected(const AdmissibleSubchain& c) {
    ARQuiver ar = ar_quiver(c);
    size_t cnt = ar.vertices.size();
    if (cnt == 0) return true;
    std::vector<std::vector<int>> adj(cnt);
    for (auto [a, b] : ar.arrows) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(cnt, false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return visited == cnt;
}

}  // namespace dyckcat
