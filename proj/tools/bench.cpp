// Serial-versus-parallel comparison for the scan kernels that carry the
// oracle: the two-generator A-scan, subalgebra lattice filtering, and the
// q_set element sweep. Prints one TSV row per kernel and size.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "solvlie/aclass.hpp"
#include "solvlie/generators.hpp"

using namespace solvlie;
using clock_type = std::chrono::steady_clock;

namespace {

double run_ms(const std::function<void()>& fn) {
    auto t0 = clock_type::now();
    fn();
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(clock_type::now() -
                                                                                 t0)
        .count();
}

void row(const std::string& kernel, const std::string& size, double serial_ms,
         double parallel_ms) {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("%s\t%s\t%.1f\t%.1f\t%.2fx\t%d\n", kernel.c_str(), size.c_str(), serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, threads);
}

}  // namespace

int main(int argc, char** argv) {
    const bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";
    std::printf("kernel\tsize\tserial_ms\tparallel_ms\tspeedup\tthreads\n");

    {
        LieAlgebra L = example_2_4(FieldSpec::prime_field(3));
        EnumBudget b;
        fpk::set_parallel_scans(false);
        double s = run_ms([&] { oracle_is_A(L, b); });
        fpk::set_parallel_scans(true);
        double p = run_ms([&] { oracle_is_A(L, b); });
        row("pair_scan", "GF(3) dim 5", s, p);
    }
    {
        LieAlgebra L = example_2_4(FieldSpec::prime_field(3));
        fpk::set_parallel_scans(false);
        double s = run_ms([&] { enum_subalgebras(L); });
        fpk::set_parallel_scans(true);
        double p = run_ms([&] { enum_subalgebras(L); });
        row("subalgebra_lattice", "GF(3) dim 5", s, p);
    }
    {
        LieAlgebra L = theorem_6_6_algebra(2, 2, {Scalar::zero(FieldSpec::prime_field(2)),
                                                  Scalar::one(FieldSpec::prime_field(2))},
                                           FieldSpec::prime_field(2));
        EnumBudget b;
        fpk::set_parallel_scans(false);
        double s = run_ms([&] { q_set(L, b); });
        fpk::set_parallel_scans(true);
        double p = run_ms([&] { q_set(L, b); });
        row("q_set_sweep", "GF(2) dim 8", s, p);
    }
    if (heavy) {
        LieAlgebra L = example_2_4(FieldSpec::prime_field(5));
        EnumBudget b;
        b.max_pairs = 13'000'000;
        fpk::set_parallel_scans(false);
        double s = run_ms([&] { oracle_is_A(L, b); });
        fpk::set_parallel_scans(true);
        double p = run_ms([&] { oracle_is_A(L, b); });
        row("pair_scan", "GF(5) dim 7", s, p);
    }
    fpk::set_parallel_scans(true);
    return 0;
}
