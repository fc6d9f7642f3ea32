#include "dyckcat/subchain.hpp"

#include <algorithm>
#include <sstream>

namespace dyckcat {

namespace {

bool ascending_distinct(const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] >= v[i + 1]) return false;
    return true;
}

}  // namespace

bool AdmissibleSubchain::valid() const {
    if (n < 2) return false;
    if (!ascending_distinct(sinks) || !ascending_distinct(sources)) return false;
    struct Entry {
        int idx;
        bool sink;
    };
    std::vector<Entry> merged;
    for (int x : sinks) merged.push_back({x, true});
    for (int x : sources) merged.push_back({x, false});
    if (merged.empty()) return false;
    std::sort(merged.begin(), merged.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
    for (const Entry& e : merged)
        if (e.idx < 1 || e.idx > n - 1) return false;
    if (merged.front().idx != 1 || merged.back().idx != n - 1) return false;
    for (size_t i = 0; i + 1 < merged.size(); ++i) {
        if (merged[i].idx == merged[i + 1].idx) return false;      // sinks and sources disjoint
        if (merged[i].sink == merged[i + 1].sink) return false;    // strict alternation
    }
    return true;
}

void AdmissibleSubchain::require_valid() const {
    if (!valid()) throw invalid_input_error("inadmissible subchain: " + spec_string());
}

std::vector<int> AdmissibleSubchain::members() const {
    std::vector<int> out = sinks;
    out.insert(out.end(), sources.begin(), sources.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool AdmissibleSubchain::is_sink(int x) const {
    return std::binary_search(sinks.begin(), sinks.end(), x);
}

bool AdmissibleSubchain::is_source(int x) const {
    return std::binary_search(sources.begin(), sources.end(), x);
}

std::string AdmissibleSubchain::spec_string() const {
    std::ostringstream os;
    bool first = true;
    for (int x : members()) {
        if (!first) os << ',';
        first = false;
        os << (is_sink(x) ? 'i' : 'j') << x;
    }
    return os.str();
}

AdmissibleSubchain parse_chain_spec(int n, const std::string& spec) {
    AdmissibleSubchain c;
    c.n = n;
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw invalid_input_error("empty token in chain spec");
        char role = tok[0];
        if (role != 'i' && role != 'j')
            throw invalid_input_error("chain token must start with 'i' or 'j': " + tok);
        size_t pos = 0;
        int idx;
        try {
            idx = std::stoi(tok.substr(1), &pos);
        } catch (const std::exception&) {
            throw invalid_input_error("bad index in chain token: " + tok);
        }
        if (pos + 1 != tok.size()) throw invalid_input_error("trailing junk in chain token: " + tok);
        (role == 'i' ? c.sinks : c.sources).push_back(idx);
    }
    std::sort(c.sinks.begin(), c.sinks.end());
    std::sort(c.sources.begin(), c.sources.end());
    c.require_valid();
    return c;
}

std::vector<AdmissibleSubchain> enumerate_subchains(int n) {
    if (n < 2) throw invalid_input_error("subchains require n >= 2");
    int m = n - 1;
    std::vector<AdmissibleSubchain> out;
    if (m == 1) {
        // Single vertex: both role assignments satisfy the patterns; keep the
        // sink encoding as the canonical one.
        AdmissibleSubchain c;
        c.n = n;
        c.sinks = {1};
        out.push_back(std::move(c));
        return out;
    }
    // One chain per edge-orientation vector of the A_m path: the chain
    // members are the local extremes (endpoints included).
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        // bit s set = arrow s+1 -> s+2 (rightward edge between s+1 and s+2)
        auto rightward = [&](int s) { return (mask >> (s - 1)) & 1u; };  // edge s: s..s+1
        AdmissibleSubchain c;
        c.n = n;
        for (int x = 1; x <= m; ++x) {
            bool in_left = x > 1 && rightward(x - 1);    // arrow (x-1) -> x
            bool out_left = x > 1 && !rightward(x - 1);  // arrow x -> (x-1)
            bool in_right = x < m && !rightward(x);      // arrow (x+1) -> x
            bool out_right = x < m && rightward(x);      // arrow x -> (x+1)
            bool has_in = in_left || in_right;
            bool has_out = out_left || out_right;
            if (has_in && !has_out)
                c.sinks.push_back(x);
            else if (has_out && !has_in)
                c.sources.push_back(x);
        }
        if (!c.valid()) throw internal_error("orientation produced inadmissible chain");
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const AdmissibleSubchain& a, const AdmissibleSubchain& b) {
        return a.spec_string() < b.spec_string();
    });
    return out;
}

}  // namespace dyckcat
