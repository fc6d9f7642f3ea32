// Benchmark comparing the OpenMP bulk kernels against their serial
// reference implementations.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dyckcat/bulk.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-32s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    using namespace dyckcat;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels run serially\n");
#endif
    std::printf("%-32s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        AdmissibleSubchain c = enumerate_subchains(12).front();
        double s = time_ms([&] { bulk::hom_dim_table_serial(c); });
        double p = time_ms([&] { bulk::hom_dim_table(c); });
        row("hom_dim_table n=12", s, p);
    }
    {
        AdmissibleSubchain c = enumerate_subchains(12).front();
        double s = time_ms([&] { for (int rep = 0; rep < 200; ++rep) bulk::hom_table_serial(c); });
        double p = time_ms([&] { for (int rep = 0; rep < 200; ++rep) bulk::hom_table(c); });
        row("hom_table n=12 x200", s, p);
    }
    {
        double s = time_ms([] { bulk::matching_counts_serial(12); });
        double p = time_ms([] { bulk::matching_counts(12); });
        row("matching_counts n=12", s, p);
    }
    {
        double s = time_ms([] { bulk::verify_range_serial(3, 7); });
        double p = time_ms([] { bulk::verify_range(3, 7); });
        row("verify_range n=3..7", s, p);
    }
    return 0;
}
