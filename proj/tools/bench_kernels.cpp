// Timing harness for the exact linear-algebra kernels: serial reference vs
// the OpenMP row-parallel paths, on random rational and prime-field inputs.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "comax/subspace.hpp"

using namespace comax;

namespace {

Mat random_matrix(FieldSpec f, int rows, int cols, unsigned seed, int spread) {
    Mat m(f, rows, cols);
    unsigned s = seed;
    for (auto& e : m.e) {
        s = s * 1664525u + 1013904223u;
        e = f.from_long(long(s >> 8) % (2 * spread + 1) - spread);
    }
    return m;
}

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

template <typename F>
double time_once(F&& fn) {
    double t0 = now();
    fn();
    return now() - t0;
}

void bench_rref(FieldSpec f, const char* name, int n) {
    Mat m = random_matrix(f, n, n + 8, 42, 9);
    RrefResult a, b;
    double ts = time_once([&] { a = detail::rref_serial(m); });
    double tp = time_once([&] { b = detail::rref_parallel(m); });
    bool same = a.m == b.m && a.pivots == b.pivots;
    std::printf("rref   %-6s %4dx%-4d  serial %8.3fs  parallel %8.3fs  speedup %.2fx  %s\n",
                name, n, n + 8, ts, tp, ts / tp, same ? "match" : "MISMATCH");
}

void bench_mul(FieldSpec f, const char* name, int n) {
    Mat x = random_matrix(f, n, n, 7, 9);
    Mat y = random_matrix(f, n, n, 11, 9);
    Mat a, b;
    double ts = time_once([&] { a = detail::mul_serial(x, y); });
    double tp = time_once([&] { b = detail::mul_parallel(x, y); });
    std::printf("matmul %-6s %4dx%-4d  serial %8.3fs  parallel %8.3fs  speedup %.2fx  %s\n",
                name, n, n, ts, tp, ts / tp, a == b ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1) scale = 1;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled at build time; both paths run serially\n");
#endif
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f5 = FieldSpec::prime_field(5);

    // rational elimination suffers the classic entry growth, which is where
    // the parallel row updates pay off
    bench_rref(q, "Q", 48 * scale);
    bench_rref(q, "Q", 72 * scale);
    bench_rref(f5, "F5", 96 * scale);
    bench_mul(q, "Q", 64 * scale);
    bench_mul(q, "Q", 96 * scale);
    bench_mul(f5, "F5", 128 * scale);
    return 0;
}
