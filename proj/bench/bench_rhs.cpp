// Serial reference vs OpenMP RHS on the smoke-benchmark state.
//   bench_rhs [N ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "multifluid/kernels.hpp"
#include "multifluid/solver.hpp"

using namespace multifluid;

namespace {

template <class F>
double seconds_per_call(F&& f) {
    using clock = std::chrono::steady_clock;
    int reps = 1;
    while (true) {
        const auto t0 = clock::now();
        for (int i = 0; i < reps; ++i) f();
        const double dt = std::chrono::duration<double>(clock::now() - t0).count();
        if (dt > 0.2) return dt / reps;
        reps *= 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes{256, 1024, 4096, 16384};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::strtoul(argv[i], nullptr, 10));
    }
    const auto law = PressureLaw::power(ParamCurve::constant(1.0), ParamCurve::affine(1.32, 0.06, 1.32, 1.38));
    const PsiSpec psi(default_alpha(1.3, 1.4));
    InitParams ip;
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads=%d\n%8s %14s %14s %8s %s\n", threads, "N", "serial[us]", "parallel[us]", "speedup",
                "identical");
    for (std::size_t n : sizes) {
        const Grid grid(n, 6.283185307179586);
        const State s = init_data(InitFamily::Composite, ip, grid, law).state;
        const KernelOptions opt{};
        Tendency a(n), b(n);
        RhsWorkspace ws;
        const double ts = seconds_per_call([&] { rhs_reference(s, grid, law, psi, opt, a); });
        const double tp = seconds_per_call([&] { rhs_parallel(s, grid, law, psi, opt, ws, b); });
        const bool same = a.rho == b.rho && a.mom == b.mom && a.spc == b.spc;
        std::printf("%8zu %14.2f %14.2f %8.2f %s\n", n, ts * 1e6, tp * 1e6, ts / tp, same ? "yes" : "NO");
    }
    return 0;
}
