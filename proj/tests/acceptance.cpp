// Acceptance battery: one line per criterion, nonzero exit on any failure.
// Everything is exact arithmetic; tolerances are equalities.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ncx/classes.hpp"
#include "ncx/homotopy.hpp"
#include "ncx/linalg.hpp"
#include "ncx/randomgen.hpp"
#include "ncx/triangle.hpp"
#include "ncx/verify.hpp"

using namespace ncx;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& extra = "") {
    std::printf("[%s] %2d: %s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                extra.empty() ? "" : (" (" + extra + ")").c_str());
    std::fflush(stdout);
    if (!pass)
        ++g_failures;
}

bool suite_ok(const std::string& name, std::uint64_t seed, int trials, std::string& extra) {
    VerifyReport rep = run_suite(name, seed, trials);
    extra = std::to_string(rep.trials) + " trials, " + std::to_string(rep.failures.size()) + " failures, " +
            std::to_string(rep.elapsed_seconds).substr(0, 5) + "s";
    return rep.ok();
}

// 1. every construction preserves the nilpotency law on 500 seeded instances
void criterion_nilpotency() {
    auto start = std::chrono::steady_clock::now();
    std::string extra;
    bool ok = suite_ok("nilpotency", 1001, 500, extra);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < 30.0;
    report(1, "nilpotency preservation across cone/suspension/hull", ok && in_time,
           extra + (in_time ? "" : ", over 30s budget"));
}

// 2. the disc-extension criterion coincides with exactness, both values seen
void criterion_prop31() {
    VerifyReport rep = run_suite("prop31", 1002, 200);
    // the generator mixes discs (exact) and truncated discs/stalks (inexact)
    report(2, "extension criterion equals N-exactness on 200 instances", rep.ok(),
           std::to_string(rep.failures.size()) + " mismatches");
}

// 3. split_test(extension_of(f)) iff null_homotopy(f)
void criterion_kernel_law() {
    VerifyReport rep = run_suite("lemma24-kernel", 1003, 200);
    report(3, "extension splitness matches null-homotopy on 200 maps", rep.ok(),
           std::to_string(rep.failures.size()) + " mismatches");
}

// 4. strict retraction synthesis: a u = id exactly on >= 100 instances
void criterion_strict_retraction() {
    VerifyReport rep = run_suite("lemma41", 1004, 100);
    report(4, "homotopy retractions upgrade to strict retractions", rep.ok(),
           std::to_string(rep.failures.size()) + " failures");
}

// 5. single-amplitude exactness agrees with all-amplitude exactness
void criterion_amplitude_modes() {
    VerifyReport rep = run_suite("remark-amplitude", 1005, 200);
    report(5, "single-amplitude and all-amplitude exactness agree", rep.ok(),
           std::to_string(rep.failures.size()) + " mismatches");
}

// 6. epimorphism criterion on the same sampling model
void criterion_epi() {
    VerifyReport rep = run_suite("epi-criterion", 1005, 200);
    report(6, "cycle-restriction surjectivity equals exactness", rep.ok(),
           std::to_string(rep.failures.size()) + " mismatches");
}

// 7. suspensions of exact complexes stay exact
void criterion_sigma() {
    VerifyReport rep = run_suite("sigma-exact", 1007, 100);
    report(7, "suspension and inverse suspension preserve exactness", rep.ok(),
           std::to_string(rep.failures.size()) + " failures");
}

// 8. disc battery: contractible, exact, and ext-orthogonal to everything
void criterion_disc_battery() {
    Rng rng(1008);
    static const std::vector<CoefficientDomain> doms{
        CoefficientDomain::prime_field(2), CoefficientDomain::prime_field(3), CoefficientDomain::prime_field(5)};
    int checked = 0, bad = 0;
    for (int n = 2; n <= 5; ++n)
        for (int top = -3; top <= 3; ++top)
            for (std::size_t m = 1; m <= 3; ++m) {
                const CoefficientDomain& dom = doms[static_cast<std::size_t>(rng.in(0, 2))];
                NComplex d = disc(n, top, n, m, dom);
                ++checked;
                if (!is_contractible(d) || !is_N_exact(d)) {
                    ++bad;
                    continue;
                }
                for (int k = 0; k < 20; ++k) {
                    NComplex y = random_complex_with(rng, n, dom, 2, 3);
                    if (ext_dw_dim(d, y) != 0) {
                        ++bad;
                        break;
                    }
                }
            }
    report(8, "disc battery: contractible, exact, ext-orthogonal", bad == 0,
           std::to_string(checked) + " discs x 20 targets, " + std::to_string(bad) + " failures");
}

// 9. N=2 behaviour matches the classical oracle
void criterion_classical() {
    VerifyReport rep = run_suite("n2-regression", 1009, 200);
    report(9, "N=2 regression against the classical oracle", rep.ok(),
           std::to_string(rep.failures.size()) + " mismatches");
}

// 10. the worked two-term example over F_5
void criterion_worked_example() {
    NComplex x(3, CoefficientDomain::prime_field(5), 0, {1, 1},
               {ExactMatrix::identity(CoefficientDomain::prime_field(5), 1)});
    bool ok = true;
    for (int i = x.lo(); i <= x.hi(); ++i)
        for (int r = 1; r < 3; ++r) {
            AmplitudeHomology h = homology(x, i, r);
            bool expect_nonzero = (i == 0 && r == 2) || (i == 1 && r == 1);
            if (expect_nonzero)
                ok = ok && h.free_rank == 1 && h.torsion.empty();
            else
                ok = ok && h.is_zero();
        }
    report(10, "worked example: 0 -> k -> k -> 0 at N=3 over F_5", ok);
}

// 11. exact-linalg battery: SNF invariants on 1000 matrices + field solve/rank
void criterion_linalg() {
    Rng rng(1011);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.in(0, 6));
        std::size_t c = static_cast<std::size_t>(rng.in(0, 6));
        ExactMatrix a(CoefficientDomain::integers(), r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                a.set(i, j, Rat(rng.in(-9, 9)));
        SmithForm sf = smith_normal_form(a);
        bool ok = sf.u * a * sf.v == sf.d && abs(det(sf.u)) == 1 && abs(det(sf.v)) == 1;
        std::size_t diag = std::min(r, c);
        bool seen_zero = false;
        for (std::size_t i = 0; i < diag && ok; ++i) {
            const Rat& di = sf.d.at(i, i);
            ok = di >= 0;
            if (di == 0)
                seen_zero = true;
            else
                ok = ok && !seen_zero;
            if (ok && i + 1 < diag && di != 0 && sf.d.at(i + 1, i + 1) != 0)
                ok = Rat(sf.d.at(i + 1, i + 1) / di).get_den() == 1;
        }
        if (!ok)
            ++bad;
    }

    static const std::vector<CoefficientDomain> fields{
        CoefficientDomain::prime_field(2), CoefficientDomain::prime_field(3), CoefficientDomain::prime_field(5),
        CoefficientDomain::rationals()};
    for (const CoefficientDomain& dom : fields) {
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t r = static_cast<std::size_t>(rng.in(0, 5));
            std::size_t c = static_cast<std::size_t>(rng.in(0, 5));
            ExactMatrix a(dom, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    a.set(i, j, Rat(rng.in(-6, 6)));
            ExactMatrix k = kernel_basis(a);
            if (rank(a) + k.cols() != a.cols() || !(a * k).is_zero()) {
                ++bad;
                continue;
            }
            ExactMatrix x(dom, c, 2);
            for (std::size_t i = 0; i < c; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    x.set(i, j, Rat(rng.in(-3, 3)));
            ExactMatrix b = a * x;
            auto sol = solve(a, b);
            if (!sol || a * *sol != b)
                ++bad;
        }
    }
    report(11, "exact linear algebra battery (SNF + field solve/rank)", bad == 0,
           std::to_string(bad) + " failures");
}

} // namespace

int main() {
    std::printf("acceptance battery (exact arithmetic, zero tolerance)\n");
    criterion_nilpotency();
    criterion_prop31();
    criterion_kernel_law();
    criterion_strict_retraction();
    criterion_amplitude_modes();
    criterion_epi();
    criterion_sigma();
    criterion_disc_battery();
    criterion_classical();
    criterion_worked_example();
    criterion_linalg();
    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
