#include "dyckcat/bulk.hpp"

#include "dyckcat/quiverrep.hpp"
#include "dyckcat/snake.hpp"

namespace dyckcat {
namespace bulk {

std::vector<std::uint8_t> hom_table_serial(const AdmissibleSubchain& c) {
    std::vector<PeakPath> s = enumerate_peak_paths(c.n);
    size_t cnt = s.size();
    std::vector<std::uint8_t> out(cnt * cnt, 0);
    for (size_t i = 0; i < cnt; ++i)
        for (size_t j = 0; j < cnt; ++j) out[i * cnt + j] = hom_nonzero(s[i], s[j], c) ? 1 : 0;
    return out;
}

std::vector<std::uint8_t> hom_table(const AdmissibleSubchain& c) {
    std::vector<PeakPath> s = enumerate_peak_paths(c.n);
    size_t cnt = s.size();
    std::vector<std::uint8_t> out(cnt * cnt, 0);
#pragma omp parallel for schedule(static)
    for (long long idx = 0; idx < static_cast<long long>(cnt * cnt); ++idx) {
        size_t i = static_cast<size_t>(idx) / cnt, j = static_cast<size_t>(idx) % cnt;
        out[idx] = hom_nonzero(s[i], s[j], c) ? 1 : 0;
    }
    return out;
}

std::vector<int> hom_dim_table_serial(const AdmissibleSubchain& c) {
    std::vector<PeakPath> s = enumerate_peak_paths(c.n);
    size_t cnt = s.size();
    std::vector<RepA> reps;
    reps.reserve(cnt);
    for (const PeakPath& y : s) reps.push_back(theta(y, c));
    std::vector<int> out(cnt * cnt, 0);
    for (size_t i = 0; i < cnt; ++i)
        for (size_t j = 0; j < cnt; ++j) out[i * cnt + j] = hom_dim_bruteforce(reps[i], reps[j]);
    return out;
}

std::vector<int> hom_dim_table(const AdmissibleSubchain& c) {
    std::vector<PeakPath> s = enumerate_peak_paths(c.n);
    size_t cnt = s.size();
    std::vector<RepA> reps;
    reps.reserve(cnt);
    for (const PeakPath& y : s) reps.push_back(theta(y, c));
    std::vector<int> out(cnt * cnt, 0);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long idx = 0; idx < static_cast<long long>(cnt * cnt); ++idx) {
        size_t i = static_cast<size_t>(idx) / cnt, j = static_cast<size_t>(idx) % cnt;
        out[idx] = hom_dim_bruteforce(reps[i], reps[j]);
    }
    return out;
}

std::vector<VerifyReport> verify_range_serial(int nmin, int nmax, std::size_t cap) {
    std::vector<AdmissibleSubchain> chains;
    for (int n = nmin; n <= nmax; ++n)
        for (AdmissibleSubchain& c : enumerate_subchains(n)) chains.push_back(std::move(c));
    std::vector<VerifyReport> out(chains.size());
    for (size_t i = 0; i < chains.size(); ++i) out[i] = verify_bijection(chains[i], cap);
    return out;
}

std::vector<VerifyReport> verify_range(int nmin, int nmax, std::size_t cap) {
    std::vector<AdmissibleSubchain> chains;
    for (int n = nmin; n <= nmax; ++n)
        for (AdmissibleSubchain& c : enumerate_subchains(n)) chains.push_back(std::move(c));
    std::vector<VerifyReport> out(chains.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(chains.size()); ++i)
        out[i] = verify_bijection(chains[i], cap);
    return out;
}

std::vector<unsigned long long> matching_counts_serial(int n) {
    std::vector<AdmissibleSubchain> chains = enumerate_subchains(n);
    std::vector<unsigned long long> out(chains.size());
    for (size_t i = 0; i < chains.size(); ++i)
        out[i] = enumerate_matchings(snake_from_subchain(chains[i])).size();
    return out;
}

std::vector<unsigned long long> matching_counts(int n) {
    std::vector<AdmissibleSubchain> chains = enumerate_subchains(n);
    std::vector<unsigned long long> out(chains.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(chains.size()); ++i)
        out[i] = enumerate_matchings(snake_from_subchain(chains[i])).size();
    return out;
}

}  // namespace bulk
}  // namespace dyckcat
