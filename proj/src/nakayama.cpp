#include "dyckcat/nakayama.hpp"

#include <algorithm>
#include <map>

namespace dyckcat {

bool KupischSeries::valid() const {
    int m = size();
    if (m < 1) return false;
    if (c[m - 1] != 1) return false;
    for (int i = 1; i <= m; ++i)
        if (c[i - 1] < 1 || c[i - 1] > m - i + 1) return false;
    for (int i = 1; i <= m - 1; ++i)
        if (c[i] < c[i - 1] - 1) return false;
    return true;
}

void KupischSeries::require_valid() const {
    if (!valid()) throw invalid_input_error("invalid Kupisch series");
}

NvSpec nv_spec(const KupischSeries& k) {
    k.require_valid();
    NvSpec s;
    s.n = k.size();
    s.bound = k.c;
    for (int i = 1; i <= s.n; ++i) s.partition.push_back(s.n - (k.c[i - 1] + i - 1));
    return s;
}

DyckPath dyck_from_kupisch(const KupischSeries& k) {
    k.require_valid();
    int m = k.size();
    std::string s;
    int ups = 0;
    for (int i = 1; i <= m; ++i) {
        int h = k.c[i - 1] + i - 1;  // nondecreasing, i <= h <= m
        while (ups < h) {
            s.push_back('U');
            ++ups;
        }
        s.push_back('D');
    }
    return DyckPath::parse(s);
}

KupischSeries kupisch_from_dyck(const DyckPath& p) {
    KupischSeries k;
    int ups = 0, col = 0;
    for (char ch : p.steps()) {
        if (ch == 'U') {
            ++ups;
        } else {
            ++col;
            k.c.push_back(ups - col + 1);
        }
    }
    if (!k.valid()) throw invalid_input_error("path does not encode a Kupisch series");
    return k;
}

std::vector<PeakPath> nv_objects(const NvSpec& spec) {
    std::vector<PeakPath> out;
    for (int i = 1; i <= spec.n; ++i)
        for (int r = i; r <= spec.bound[i - 1] + i - 1; ++r) out.push_back(PeakPath{spec.n + 1, i, r});
    return out;
}

std::vector<PeakPath> nv_objects(const KupischSeries& k) { return nv_objects(nv_spec(k)); }

namespace {

struct NakModule {
    int l = 0, r = 0;
    bool projective = false;
    bool injective = false;
    std::vector<int> in;
    bool in_final = false;
    int tau_inv = -1;
    int tau = -1;
};

}  // namespace

ARQuiver ar_quiver_nakayama(const KupischSeries& k) {
    k.require_valid();
    int n = k.size();

    ARQuiver ar;
    ar.n = n + 1;
    ar.vertices = nv_objects(k);
    std::sort(ar.vertices.begin(), ar.vertices.end());
    std::map<std::pair<int, int>, int> id;
    for (size_t i = 0; i < ar.vertices.size(); ++i)
        id[{ar.vertices[i].l, ar.vertices[i].r}] = static_cast<int>(i);

    std::vector<NakModule> mod(ar.vertices.size());
    for (size_t i = 0; i < ar.vertices.size(); ++i) {
        mod[i].l = ar.vertices[i].l;
        mod[i].r = ar.vertices[i].r;
    }
    // P(a) = [a, a + c_a - 1]; I(b) = [min a, b]. The quiver is linear
    // 1 -> 2 -> ... -> n, so rad P(a) = [a+1, a + c_a - 1].
    std::vector<int> proj_of(n + 1);
    for (int a = 1; a <= n; ++a) {
        proj_of[a] = id.at({a, a + k.c[a - 1] - 1});
        mod[proj_of[a]].projective = true;
    }
    for (int b = 1; b <= n; ++b) {
        int amin = b;
        while (amin > 1 && b <= (amin - 1) + k.c[amin - 2] - 1) --amin;
        mod[id.at({amin, b})].injective = true;
    }
    for (int a = 1; a <= n; ++a) {
        if (k.c[a - 1] < 2) {
            mod[proj_of[a]].in_final = true;
            continue;
        }
        mod[proj_of[a]].in.push_back(id.at({a + 1, a + k.c[a - 1] - 1}));
        mod[proj_of[a]].in_final = true;
    }
    // Radical summands may be non-projective here, so every module needs an
    // in_final pass once created; non-radical non-projectives start unknown.
    auto rad_target = [&](int l, int r) -> int {
        // M = [l, r] is rad P(l-1) iff c_{l-1} = r - l + 2.
        if (l >= 2 && k.c[l - 2] == r - l + 2) return proj_of[l - 1];
        return -1;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t w = 0; w < mod.size(); ++w) {
            NakModule& W = mod[w];
            if (W.injective || W.tau_inv >= 0 || !W.in_final) continue;
            bool ready = true;
            for (int x : W.in)
                if (!mod[x].injective && mod[x].tau_inv < 0) ready = false;
            if (!ready) continue;

            std::vector<int> targets;
            int rt = rad_target(W.l, W.r);
            if (rt >= 0) targets.push_back(rt);
            for (int x : W.in)
                if (!mod[x].injective) targets.push_back(mod[x].tau_inv);

            std::vector<int> dsum(n + 2, 0);
            for (int t : targets)
                for (int v = mod[t].l; v <= mod[t].r; ++v) ++dsum[v];
            for (int v = W.l; v <= W.r; ++v) --dsum[v];
            int nl = 0, nr = 0;
            for (int v = 1; v <= n; ++v) {
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
            auto it = id.find({nl, nr});
            if (it == id.end()) throw internal_error("tau-inverse left the subcategory");
            int nid = it->second;
            W.tau_inv = nid;
            mod[nid].tau = static_cast<int>(w);
            mod[nid].in = targets;
            mod[nid].in_final = true;
            progress = true;
        }
        // Modules that are neither projective nor anyone's tau-inverse yet
        // may still be waiting for their in-set; nothing else to do here.
    }
    for (size_t i = 0; i < mod.size(); ++i) {
        if (!mod[i].injective && mod[i].tau_inv < 0)
            throw internal_error("Nakayama knitting left a module open");
        if (!mod[i].projective && mod[i].tau < 0) throw internal_error("non-projective without tau");
    }

    for (size_t v = 0; v < mod.size(); ++v)
        for (int x : mod[v].in) ar.arrows.emplace_back(x, static_cast<int>(v));
    std::sort(ar.arrows.begin(), ar.arrows.end());
    for (size_t v = 0; v < mod.size(); ++v)
        if (mod[v].tau >= 0) ar.tau.emplace_back(static_cast<int>(v), mod[v].tau);
    return ar;
}

}  // namespace dyckcat
