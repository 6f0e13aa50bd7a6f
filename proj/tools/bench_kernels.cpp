// Compares the OpenMP-parallel library kernels against the serial reference
// implementations on growing random matrices.
#include "gring/normal_form.hpp"
#include "reference_linalg.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace gring;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0xbe9c4;
    std::mt19937_64 rng(seed);
#ifdef _OPENMP
    std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build)\n");
#endif

    std::printf("%-10s %8s %14s %14s %8s\n", "kernel", "n", "parallel(ms)", "serial(ms)", "match");
    for (std::size_t n : {64, 128, 256}) {
        IntMatrix a = random_matrix(rng, n, 1000);
        IntMatrix b = random_matrix(rng, n, 1000);
        IntMatrix c_par, c_ser;
        double tp = time_ms([&] { c_par = a * b; });
        double ts = time_ms([&] { c_ser = gring_ref::mul(a, b); });
        std::printf("%-10s %8zu %14.1f %14.1f %8s\n", "matmul", n, tp, ts,
                    c_par == c_ser ? "yes" : "NO");
    }
    for (std::size_t n : {32, 64, 96}) {
        IntMatrix a = random_matrix(rng, n, 40);
        IntMatrix h_par, h_ser;
        double tp = time_ms([&] { h_par = hnf_basis(a); });
        double ts = time_ms([&] { h_ser = gring_ref::hnf_basis(a); });
        std::printf("%-10s %8zu %14.1f %14.1f %8s\n", "hnf", n, tp, ts,
                    h_par == h_ser ? "yes" : "NO");
    }
    return 0;
}
