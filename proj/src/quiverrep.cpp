#include "dyckcat/quiverrep.hpp"

#include <algorithm>

namespace dyckcat {

EdgeDir QuiverA::edge(int s) const {
    if (s < 1 || s > m - 1) throw invalid_input_error("edge index out of range");
    return orientation[s - 1];
}

bool QuiverA::arrow_between(int a, int b) const {
    if (a + 1 == b) return edge(a) == EdgeDir::Right;
    if (b + 1 == a) return edge(b) == EdgeDir::Left;
    return false;
}

std::vector<int> QuiverA::sinks() const {
    if (m == 1) return {1};  // lone vertex counts as the sink
    std::vector<int> out;
    for (int x = 1; x <= m; ++x) {
        bool has_out = (x > 1 && edge(x - 1) == EdgeDir::Left) || (x < m && edge(x) == EdgeDir::Right);
        bool has_in = (x > 1 && edge(x - 1) == EdgeDir::Right) || (x < m && edge(x) == EdgeDir::Left);
        if (has_in && !has_out) out.push_back(x);
    }
    return out;
}

std::vector<int> QuiverA::sources() const {
    std::vector<int> out;
    for (int x = 1; x <= m; ++x) {
        bool has_out = (x > 1 && edge(x - 1) == EdgeDir::Left) || (x < m && edge(x) == EdgeDir::Right);
        bool has_in = (x > 1 && edge(x - 1) == EdgeDir::Right) || (x < m && edge(x) == EdgeDir::Left);
        if (has_out && !has_in) out.push_back(x);
    }
    return out;
}

QuiverA quiver_from_subchain(const AdmissibleSubchain& c) {
    c.require_valid();
    QuiverA q;
    q.m = c.n - 1;
    std::vector<int> mem = c.members();
    for (int s = 1; s <= q.m - 1; ++s) {
        // Enclosing chain interval [lo, hi] with lo <= s < s+1 <= hi; arrows
        // point toward whichever end is the sink.
        auto it = std::upper_bound(mem.begin(), mem.end(), s);
        int hi = *it;          // first member >= s+1
        int lo = *(it - 1);    // last member <= s
        q.orientation.push_back(c.is_sink(lo) ? EdgeDir::Left : EdgeDir::Right);
        (void)hi;
    }
    return q;
}

RepA RepA::interval(const QuiverA& q, int l, int r) {
    if (l < 1 || r > q.m || l > r) throw invalid_input_error("bad interval");
    RepA rep;
    rep.quiver = q;
    rep.dims.assign(q.m, 0);
    for (int v = l; v <= r; ++v) rep.dims[v - 1] = 1;
    for (int s = 1; s <= q.m - 1; ++s) {
        int src = q.edge(s) == EdgeDir::Right ? s : s + 1;
        int tgt = q.edge(s) == EdgeDir::Right ? s + 1 : s;
        Mat mat(rep.dims[tgt - 1], rep.dims[src - 1]);
        if (l <= s && s + 1 <= r) mat.at(0, 0) = 1;  // identity inside the support
        rep.maps.push_back(std::move(mat));
    }
    return rep;
}

bool RepA::interval_support(int& l, int& r) const {
    l = 0;
    r = 0;
    for (int v = 1; v <= quiver.m; ++v) {
        int d = dims[v - 1];
        if (d != 0 && d != 1) return false;
        if (d == 1) {
            if (l == 0)
                l = r = v;
            else if (v == r + 1)
                r = v;
            else
                return false;
        }
    }
    return l != 0;
}

RepA theta(const PeakPath& y, const AdmissibleSubchain& c) {
    c.require_valid();
    if (y.n != c.n) throw invalid_input_error("peak path and subchain disagree on n");
    return RepA::interval(quiver_from_subchain(c), y.l, y.r);
}

PeakPath theta_inverse(const std::vector<int>& dims, const AdmissibleSubchain& c) {
    c.require_valid();
    if (static_cast<int>(dims.size()) != c.n - 1)
        throw invalid_input_error("dimension vector has wrong length");
    RepA probe;
    probe.quiver = quiver_from_subchain(c);
    probe.dims = dims;
    int l, r;
    if (!probe.interval_support(l, r))
        throw invalid_input_error("dimension vector is not a nonempty interval indicator");
    return PeakPath{c.n, l, r};
}

namespace {

// Unknowns: entries of one matrix F_v per vertex (dims_b[v] x dims_a[v]).
// Equations: F_t A_e = B_e F_s for every edge e: s -> t.
Mat intertwiner_system(const RepA& a, const RepA& b) {
    const QuiverA& q = a.quiver;
    std::vector<int> offset(q.m + 1, 0);
    for (int v = 1; v <= q.m; ++v) offset[v] = offset[v - 1] + b.dims[v - 1] * a.dims[v - 1];
    int unknowns = offset[q.m];
    auto idx = [&](int v, int row, int col) { return offset[v - 1] + row * a.dims[v - 1] + col; };

    int rows = 0;
    for (int s = 1; s <= q.m - 1; ++s) {
        int src = q.edge(s) == EdgeDir::Right ? s : s + 1;
        int tgt = q.edge(s) == EdgeDir::Right ? s + 1 : s;
        rows += b.dims[tgt - 1] * a.dims[src - 1];
    }
    Mat sys(std::max(rows, 1), std::max(unknowns, 1));
    if (unknowns == 0) return Mat(1, 1);

    int row = 0;
    for (int s = 1; s <= q.m - 1; ++s) {
        int src = q.edge(s) == EdgeDir::Right ? s : s + 1;
        int tgt = q.edge(s) == EdgeDir::Right ? s + 1 : s;
        const Mat& A = a.maps[s - 1];
        const Mat& B = b.maps[s - 1];
        int bt = b.dims[tgt - 1], as = a.dims[src - 1];
        for (int i = 0; i < bt; ++i)
            for (int j = 0; j < as; ++j) {
                // (F_t A)_{ij} - (B F_s)_{ij} = 0
                for (int k = 0; k < a.dims[tgt - 1]; ++k)
                    if (A.at(k, j) != 0) sys.at(row, idx(tgt, i, k)) += A.at(k, j);
                for (int k = 0; k < b.dims[src - 1]; ++k)
                    if (B.at(i, k) != 0) sys.at(row, idx(src, k, j)) -= B.at(i, k);
                ++row;
            }
    }
    return sys;
}

int hom_unknowns(const RepA& a, const RepA& b) {
    int u = 0;
    for (int v = 0; v < a.quiver.m; ++v) u += a.dims[v] * b.dims[v];
    return u;
}

}  // namespace

int hom_dim_bruteforce(const RepA& a, const RepA& b) {
    if (!(a.quiver == b.quiver)) throw invalid_input_error("representations live on different quivers");
    int unknowns = hom_unknowns(a, b);
    if (unknowns == 0) return 0;
    Mat sys = intertwiner_system(a, b);
    return unknowns - sys.rank();
}

std::vector<std::vector<Mat>> hom_basis(const RepA& a, const RepA& b) {
    if (!(a.quiver == b.quiver)) throw invalid_input_error("representations live on different quivers");
    std::vector<std::vector<Mat>> out;
    if (hom_unknowns(a, b) == 0) return out;
    Mat sys = intertwiner_system(a, b);
    const QuiverA& q = a.quiver;
    std::vector<int> offset(q.m + 1, 0);
    for (int v = 1; v <= q.m; ++v) offset[v] = offset[v - 1] + b.dims[v - 1] * a.dims[v - 1];
    for (const auto& vec : sys.nullspace()) {
        std::vector<Mat> f;
        for (int v = 1; v <= q.m; ++v) {
            Mat fv(b.dims[v - 1], a.dims[v - 1]);
            for (int i = 0; i < fv.rows(); ++i)
                for (int j = 0; j < fv.cols(); ++j)
                    fv.at(i, j) = vec[offset[v - 1] + i * fv.cols() + j];
            f.push_back(std::move(fv));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::pair<int, int> projective_interval(const QuiverA& q, int x) {
    if (x < 1 || x > q.m) throw invalid_input_error("vertex out of range");
    int l = x, r = x;
    while (l > 1 && q.edge(l - 1) == EdgeDir::Left) --l;    // path x -> ... -> l
    while (r < q.m && q.edge(r) == EdgeDir::Right) ++r;     // path x -> ... -> r
    return {l, r};
}

std::pair<int, int> injective_interval(const QuiverA& q, int x) {
    if (x < 1 || x > q.m) throw invalid_input_error("vertex out of range");
    int l = x, r = x;
    while (l > 1 && q.edge(l - 1) == EdgeDir::Right) --l;   // path l -> ... -> x
    while (r < q.m && q.edge(r) == EdgeDir::Left) ++r;      // path r -> ... -> x
    return {l, r};
}

Mat cartan_matrix(const QuiverA& q) {
    Mat c(q.m, q.m);
    for (int j = 1; j <= q.m; ++j) {
        auto [l, r] = projective_interval(q, j);
        for (int i = l; i <= r; ++i) c.at(i - 1, j - 1) = 1;
    }
    return c;
}

Mat coxeter_matrix(const QuiverA& q) {
    Mat c = cartan_matrix(q);
    Mat ct(q.m, q.m);
    for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.m; ++j) ct.at(i, j) = c.at(j, i);
    Mat phi = ct * c.inverse();
    for (int i = 0; i < q.m; ++i)
        for (int j = 0; j < q.m; ++j) phi.at(i, j) = -phi.at(i, j);
    return phi;
}

std::optional<std::vector<int>> coxeter_translate(const std::vector<int>& dims, const QuiverA& q) {
    RepA probe;
    probe.quiver = q;
    probe.dims = dims;
    int l, r;
    if (!probe.interval_support(l, r))
        throw invalid_input_error("coxeter_translate expects an interval indicator");
    for (int x = 1; x <= q.m; ++x)
        if (projective_interval(q, x) == std::make_pair(l, r)) return std::nullopt;
    Mat phi = coxeter_matrix(q);
    std::vector<int> out(q.m, 0);
    for (int i = 0; i < q.m; ++i) {
        Rat acc(0);
        for (int j = 0; j < q.m; ++j) acc += phi.at(i, j) * dims[j];
        if (acc.get_den() != 1) throw internal_error("Coxeter image not integral");
        out[i] = static_cast<int>(acc.get_num().get_si());
    }
    RepA check;
    check.quiver = q;
    check.dims = out;
    if (!check.interval_support(l, r))
        throw internal_error("Coxeter translate of a non-projective is not an interval");
    return out;
}

std::vector<RepA> indecomposables(const QuiverA& q) {
    std::vector<RepA> out;
    out.reserve(static_cast<size_t>(q.m) * (q.m + 1) / 2);
    for (int l = 1; l <= q.m; ++l)
        for (int r = l; r <= q.m; ++r) out.push_back(RepA::interval(q, l, r));
    return out;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> irreducible_arrows_bruteforce(
    const QuiverA& q) {
    std::vector<std::pair<int, int>> ivals;
    for (int l = 1; l <= q.m; ++l)
        for (int r = l; r <= q.m; ++r) ivals.emplace_back(l, r);
    int cnt = static_cast<int>(ivals.size());
    std::vector<RepA> mods;
    mods.reserve(cnt);
    for (auto [l, r] : ivals) mods.push_back(RepA::interval(q, l, r));

    // One basis morphism per nonzero Hom pair (dims are all 0 or 1 here);
    // an empty entry means Hom vanishes.
    std::vector<std::vector<std::vector<Mat>>> morph(cnt, std::vector<std::vector<Mat>>(cnt));
    for (int i = 0; i < cnt; ++i)
        for (int j = 0; j < cnt; ++j) {
            if (i == j) continue;
            auto basis = hom_basis(mods[i], mods[j]);
            if (basis.size() > 1) throw internal_error("Hom dimension above 1 between intervals");
            if (!basis.empty()) morph[i][j] = std::move(basis[0]);
        }

    auto compose_nonzero = [&](int i, int k, int j) {
        // (mods[i] -> mods[k] -> mods[j]) != 0 ?
        const std::vector<Mat>& f = morph[i][k];
        const std::vector<Mat>& g = morph[k][j];
        for (int v = 0; v < q.m; ++v)
            if (!(g[v] * f[v]).is_zero()) return true;
        return false;
    };

    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> arrows;
    for (int i = 0; i < cnt; ++i)
        for (int j = 0; j < cnt; ++j) {
            if (i == j || morph[i][j].empty()) continue;
            bool factors = false;
            for (int k = 0; k < cnt && !factors; ++k) {
                if (k == i || k == j) continue;
                if (!morph[i][k].empty() && !morph[k][j].empty() && compose_nonzero(i, k, j))
                    factors = true;
            }
            if (!factors) arrows.emplace_back(ivals[i], ivals[j]);
        }
    return arrows;
}

}  // namespace dyckcat
