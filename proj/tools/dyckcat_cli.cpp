#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dyckcat/bulk.hpp"
#include "dyckcat/cluster.hpp"
#include "dyckcat/io.hpp"
#include "dyckcat/nakayama.hpp"
#include "dyckcat/shiftcat.hpp"
#include "dyckcat/snake.hpp"

namespace {

using namespace dyckcat;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

PeakPath parse_peak_path(int n, const std::string& text) {
    DyckPath p = DyckPath::parse(text);
    if (p.half_length() != n) throw invalid_input_error("path length disagrees with --n");
    auto y = peak_path_of(PairForm::decompose(p));
    if (!y) throw invalid_input_error("path has fewer than n-1 peaks: " + text);
    return *y;
}

KupischSeries parse_kupisch(const std::string& text) {
    KupischSeries k;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            k.c.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw invalid_input_error("bad Kupisch entry: " + tok);
        }
    }
    k.require_valid();
    return k;
}

int run(int argc, char** argv) {
    CLI::App app{"Dyck-path model of type-A cluster algebras"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list Dyck paths of length 2n");
    int en_n = 0, en_peaks = -1, en_bound = default_enum_bound();
    bool en_json = false;
    enumerate_cmd->add_option("--n", en_n, "half-length")->required();
    enumerate_cmd->add_option("--peaks", en_peaks, "keep only paths with this many peaks");
    enumerate_cmd->add_option("--max-n", en_bound, "enumeration bound override");
    enumerate_cmd->add_flag("--json", en_json, "emit a JSON array");

    // shifts
    auto* shifts_cmd = app.add_subcommand("shifts", "elementary shifts out of a path in S");
    int sh_n = 0;
    std::string sh_chain, sh_path;
    bool sh_json = false;
    shifts_cmd->add_option("--n", sh_n)->required();
    shifts_cmd->add_option("--chain", sh_chain, "chain spec like j1,i2,j4")->required();
    shifts_cmd->add_option("--path", sh_path)->required();
    shifts_cmd->add_flag("--json", sh_json);

    // hom
    auto* hom_cmd = app.add_subcommand("hom", "Hom criterion between two paths in S");
    int h_n = 0;
    std::string h_chain, h_from, h_to;
    hom_cmd->add_option("--n", h_n)->required();
    hom_cmd->add_option("--chain", h_chain)->required();
    hom_cmd->add_option("--from", h_from)->required();
    hom_cmd->add_option("--to", h_to)->required();

    // ar-quiver
    auto* ar_cmd = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver on S");
    int ar_n = 0;
    std::string ar_chain;
    bool ar_dot = false, ar_json = false;
    ar_cmd->add_option("--n", ar_n)->required();
    ar_cmd->add_option("--chain", ar_chain)->required();
    ar_cmd->add_flag("--dot", ar_dot);
    ar_cmd->add_flag("--json", ar_json);

    // nakayama
    auto* nak_cmd = app.add_subcommand("nakayama", "linear Nakayama algebra from a Kupisch series");
    std::string nak_series;
    bool nak_dot = false, nak_json = false, nak_dyck = false;
    nak_cmd->add_option("--kupisch", nak_series, "comma-separated series")->required();
    nak_cmd->add_flag("--dot", nak_dot);
    nak_cmd->add_flag("--json", nak_json);
    nak_cmd->add_flag("--dyck", nak_dyck, "print the associated Dyck path");

    // snake / matchings / words
    auto* snake_cmd = app.add_subcommand("snake", "snake graph of a subchain");
    auto* match_cmd = app.add_subcommand("matchings", "perfect matchings of the subchain snake");
    auto* words_cmd = app.add_subcommand("words", "the word set X_C");
    int sn_n = 0, ma_n = 0, wo_n = 0;
    std::string sn_chain, ma_chain, wo_chain;
    bool sn_json = false, ma_json = false, wo_json = false;
    snake_cmd->add_option("--n", sn_n)->required();
    snake_cmd->add_option("--chain", sn_chain)->required();
    snake_cmd->add_flag("--json", sn_json);
    match_cmd->add_option("--n", ma_n)->required();
    match_cmd->add_option("--chain", ma_chain)->required();
    match_cmd->add_flag("--json", ma_json);
    words_cmd->add_option("--n", wo_n)->required();
    words_cmd->add_option("--chain", wo_chain)->required();
    words_cmd->add_flag("--json", wo_json);

    // cluster-vars
    auto* cv_cmd = app.add_subcommand("cluster-vars", "cluster variables of the chain's quiver");
    int cv_n = 0;
    std::string cv_chain, cv_path, cv_method = "dyck";
    cv_cmd->add_option("--n", cv_n)->required();
    cv_cmd->add_option("--chain", cv_chain)->required();
    cv_cmd->add_option("--path", cv_path, "single Dyck path in S");
    cv_cmd->add_option("--method", cv_method, "dyck | mutation | both")
        ->check(CLI::IsMember({"dyck", "mutation", "both"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "cross-validate the two engines");
    int v_nmax = 0, v_nmin = 3;
    bool v_serial = false;
    verify_cmd->add_option("--nmax", v_nmax)->required();
    verify_cmd->add_option("--nmin", v_nmin);
    verify_cmd->add_flag("--serial", v_serial, "disable the parallel driver");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (enumerate_cmd->parsed()) {
        std::vector<DyckPath> paths = enumerate_dyck(en_n, en_bound);
        Json arr = Json::array();
        size_t count = 0;
        for (const DyckPath& p : paths) {
            if (en_peaks >= 0 && p.peak_count() != en_peaks) continue;
            ++count;
            if (en_json)
                arr.push_back(p.steps());
            else
                std::cout << p.steps() << '\n';
        }
        if (en_json)
            std::cout << arr.dump() << '\n';
        else
            std::cout << "count: " << count << '\n';
        return kOk;
    }

    if (shifts_cmd->parsed()) {
        AdmissibleSubchain c = parse_chain_spec(sh_n, sh_chain);
        PeakPath y = parse_peak_path(sh_n, sh_path);
        auto arrows = es_successors(y, c);
        Json arr = Json::array();
        for (const ShiftArrow& a : arrows) {
            if (sh_json) {
                Json j;
                j["target"] = a.target.path().steps();
                j["kind"] = a.kind == ShiftArrow::Kind::Left ? "left" : "right";
                j["composition"] = a.composition;
                arr.push_back(j);
            } else {
                std::cout << '[' << a.source.l << ',' << a.source.r << "] -> [" << a.target.l << ','
                          << a.target.r << "] " << (a.kind == ShiftArrow::Kind::Left ? "left" : "right")
                          << " via";
                for (int i : a.composition) std::cout << " f" << i;
                std::cout << '\n';
            }
        }
        if (sh_json) std::cout << arr.dump() << '\n';
        return kOk;
    }

    if (hom_cmd->parsed()) {
        AdmissibleSubchain c = parse_chain_spec(h_n, h_chain);
        bool nz = hom_nonzero(parse_peak_path(h_n, h_from), parse_peak_path(h_n, h_to), c);
        std::cout << (nz ? 1 : 0) << '\n';
        return kOk;
    }

    if (ar_cmd->parsed()) {
        AdmissibleSubchain c = parse_chain_spec(ar_n, ar_chain);
        ARQuiver ar = ar_quiver(c);
        if (ar_json)
            std::cout << to_json(ar, &c).dump(2) << '\n';
        else
            std::cout << to_dot(ar);
        return kOk;
    }

    if (nak_cmd->parsed()) {
        KupischSeries k = parse_kupisch(nak_series);
        if (nak_dyck) {
            std::cout << dyck_from_kupisch(k).steps() << '\n';
            return kOk;
        }
        ARQuiver ar = ar_quiver_nakayama(k);
        if (nak_json)
            std::cout << to_json(ar).dump(2) << '\n';
        else if (nak_dot)
            std::cout << to_dot(ar);
        else
            std::cout << "dyck: " << dyck_from_kupisch(k).steps() << "\nindecomposables: "
                      << ar.vertices.size() << "\narrows: " << ar.arrows.size() << '\n';
        return kOk;
    }

    if (snake_cmd->parsed()) {
        AdmissibleSubchain c = parse_chain_spec(sn_n, sn_chain);
        SnakeGraph g = snake_from_subchain(c);
        if (sn_json) {
            std::cout << to_json(g).dump() << '\n';
        } else {
            std::string s;
            for (Dirn d : g.steps()) s.push_back(static_cast<char>(d));
            std::cout << "tiles: " << g.tiles() << " steps: " << s << '\n';
        }
        return kOk;
    }

    if (match_cmd->parsed()) {
        AdmissibleSubchain c = parse_chain_spec(ma_n, ma_chain);
        SnakeGraph g = snake_from_subchain(c);
        auto ms = enumerate_matchings(g);
        if (ma_json) {
            Json arr = Json::array();
            for (const PerfectMatching& p : ms) arr.push_back(to_json(p));
            std::cout << arr.dump() << '\n';
        } else {
            for (const PerfectMatching& p : ms) std::cout << to_json(p).dump() << '\n';
            std::cout << "count: " << ms.size() << '\n';
        }
        return kOk;
    }

    if (words_cmd->parsed()) {
        AdmissibleSubchain c = parse_chain_spec(wo_n, wo_chain);
        auto ws = words_X_C(c);
        if (wo_json) {
            Json arr = Json::array();
            for (const HWord& w : ws) arr.push_back(w.str());
            std::cout << arr.dump() << '\n';
        } else {
            for (const HWord& w : ws) std::cout << w.str() << '\n';
        }
        return kOk;
    }

    if (cv_cmd->parsed()) {
        AdmissibleSubchain c = parse_chain_spec(cv_n, cv_chain);
        if (!cv_path.empty()) {
            PeakPath y = parse_peak_path(cv_n, cv_path);
            std::cout << cluster_var_from_dyck(y, c).canonical_string() << '\n';
            return kOk;
        }
        if (cv_method == "both") {
            VerifyReport rep = verify_bijection(c);
            std::cout << to_json(rep).dump(2) << '\n';
            return rep.equal ? kOk : kMismatch;
        }
        if (cv_method == "dyck") {
            std::vector<std::string> lines;
            for (const PeakPath& y : enumerate_peak_paths(cv_n))
                lines.push_back(cluster_var_from_dyck(y, c).canonical_string());
            std::sort(lines.begin(), lines.end());
            for (const std::string& s : lines) std::cout << s << '\n';
        } else {
            for (const LaurentPoly& p : enumerate_cluster_variables(quiver_from_subchain(c)))
                std::cout << p.canonical_string() << '\n';
        }
        return kOk;
    }

    if (verify_cmd->parsed()) {
        if (v_nmax < v_nmin) throw invalid_input_error("--nmax below --nmin");
        auto reports =
            v_serial ? bulk::verify_range_serial(v_nmin, v_nmax) : bulk::verify_range(v_nmin, v_nmax);
        bool all_equal = true;
        for (const VerifyReport& r : reports) {
            std::cout << to_json(r).dump() << '\n';
            all_equal = all_equal && r.equal;
        }
        std::cout << (all_equal ? "all chains verified" : "MISMATCH FOUND") << '\n';
        return all_equal ? kOk : kMismatch;
    }

    return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const invalid_input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const size_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const invalid_shift_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}
