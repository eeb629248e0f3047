// Wall-time comparison of the serial reference runner against the OpenMP
// per-point pipeline, on a degree-3 product foliation on P^3 with the full
// coordinate arrangement (40 rational singular points).

#include "logbb/scene.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#ifdef LOGBB_HAVE_OPENMP
#include <omp.h>
#endif

using namespace logbb;

namespace {

std::string bench_scene_toml() {
    std::ostringstream out;
    out << R"TOML([space]
kind = "projective"
dim = 3

[divisor]
components = ["z0", "z1", "z2", "z3"]

[foliation]
degree = 3
homogeneous = ["0", "z1*(z1-z0)*(z1+z0)", "z2*(z2-z0)*(z2+z0)", "z3*(z3-z0)*(z3+z0)"]

[phi]
expr = "c1^3"
)TOML";
    const int roots[3] = {0, 1, -1};
    auto emit = [&](int chart, int a, int b, int c) {
        out << "\n[[singularities]]\nchart = " << chart << "\npoint = [\"" << a
            << "\", \"" << b << "\", \"" << c << "\"]\n";
    };
    for (int a : roots)
        for (int b : roots)
            for (int c : roots) emit(0, a, b, c);
    for (int b : roots)
        for (int c : roots) emit(1, 0, b, c);
    for (int c : roots) emit(2, 0, 0, c);
    emit(3, 0, 0, 0);
    return out.str();
}

double run_ms(const Scene& scene, int jobs) {
    RunOptions opts;
    opts.jobs = jobs;
    auto t0 = std::chrono::steady_clock::now();
    auto rep = run_global(scene, opts);
    auto t1 = std::chrono::steady_clock::now();
    if (!rep.equal) {
        std::cerr << "bench scene failed to verify (local "
                  << rat_str(rep.local_total) << ")\n";
        std::exit(1);
    }
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int threads = 0;
#ifdef LOGBB_HAVE_OPENMP
    threads = omp_get_max_threads();
#endif
    if (argc > 1) threads = std::atoi(argv[1]);
    if (threads < 2) threads = 2;

    auto scene = scene_from_toml(bench_scene_toml());
    std::cout << "scene: P^3, degree 3, 40 singular points, full coordinate "
                 "arrangement\n";

    // warm-up also validates both paths agree
    RunOptions s1, sp;
    s1.jobs = 1;
    sp.jobs = threads;
    auto a = run_global(scene, s1);
    auto b = run_global(scene, sp);
    if (a.local_total != b.local_total || a.points.size() != b.points.size()) {
        std::cerr << "serial and parallel runners disagree\n";
        return 1;
    }
    std::cout << "verified: local total " << rat_str(a.local_total)
              << " equals the chern side on both paths\n\n";

    std::cout << "path          jobs   ms\n";
    for (int rep = 0; rep < 3; ++rep) {
        double ms1 = run_ms(scene, 1);
        double msp = run_ms(scene, threads);
        std::cout << "serial ref       1   " << ms1 << "\n";
        std::cout << "openmp          " << threads << "   " << msp
                  << "   (speedup " << (ms1 / msp) << "x)\n";
    }
    return 0;
}
