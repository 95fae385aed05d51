#include "ncx/verify.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "ncx/classes.hpp"
#include "ncx/homotopy.hpp"
#include "ncx/io.hpp"
#include "ncx/linear_system.hpp"
#include "ncx/randomgen.hpp"
#include "ncx/triangle.hpp"

namespace ncx {

bool epi_criterion_holds(const NComplex& x) {
    const int n = x.n();
    for (int deg = x.lo() - 1; deg <= x.hi(); ++deg) {
        for (int r = 2; r <= n; ++r) {
            // image of the cycle span under d, against the next cycle span
            ExactMatrix z = cycles(x, deg, r);
            ExactMatrix image = x.diff_at(deg) * z;
            ExactMatrix target = cycles(x, deg + 1, r - 1);
            if (!solve(image, target).has_value())
                return false;
        }
    }
    return true;
}

namespace {

// ---------------------------------------------------------------------------
// Classical two-term-law oracle for N = 2 complexes: textbook homology via
// rank-nullity and boundary-matrix invariant factors, the classical cone and
// shift, and the classical homotopy equation f = d s + s d. Kept separate
// from the amplitude machinery so the two routes can disagree.
// ---------------------------------------------------------------------------

struct ClassicalHomology {
    std::size_t free_rank;
    std::vector<Int> torsion;
};

ClassicalHomology classical_homology(const NComplex& x, int i) {
    std::size_t r_in = rank(x.diff_at(i - 1));
    std::size_t r_out = rank(x.diff_at(i));
    ClassicalHomology h{x.dim_at(i) - r_out - r_in, {}};
    if (x.domain().kind() == DomainKind::Integers)
        for (const Int& d : smith_normal_form(x.diff_at(i - 1)).invariant_factors)
            if (d > 1)
                h.torsion.push_back(d);
    return h;
}

NComplex classical_cone(const ChainMap& f) {
    const NComplex& x = f.source();
    const NComplex& y = f.target();
    int lo = std::min(y.lo(), x.lo() - 1);
    int hi = std::max(y.hi(), x.hi() - 1);
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> diffs;
    for (int m = lo; m <= hi; ++m)
        dims.push_back(y.dim_at(m) + x.dim_at(m + 1));
    for (int m = lo; m < hi; ++m) {
        BlockBuilder b(x.domain(), {y.dim_at(m + 1), x.dim_at(m + 2)}, {y.dim_at(m), x.dim_at(m + 1)});
        b.set(0, 0, y.diff_at(m));
        b.set(0, 1, f.component_at(m + 1));
        b.set(1, 1, -x.diff_at(m + 1));
        diffs.push_back(b.build());
    }
    return NComplex(2, x.domain(), lo, std::move(dims), std::move(diffs));
}

NComplex classical_shift(const NComplex& x) {
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> diffs;
    for (int m = x.lo() - 1; m <= x.hi() - 1; ++m)
        dims.push_back(x.dim_at(m + 1));
    for (int m = x.lo() - 1; m < x.hi() - 1; ++m)
        diffs.push_back(-x.diff_at(m + 1));
    return NComplex(2, x.domain(), x.lo() - 1, std::move(dims), std::move(diffs));
}

bool classical_null_homotopic(const ChainMap& f) {
    const NComplex& x = f.source();
    const NComplex& y = f.target();
    MapVarSystem sys(x.domain());
    std::map<int, int> s_of; // s^i : X^i -> Y^{i-1}
    for (int i = x.lo(); i <= x.hi() + 1; ++i)
        if (x.dim_at(i) > 0 && y.dim_at(i - 1) > 0)
            s_of[i] = sys.add_var(y.dim_at(i - 1), x.dim_at(i));
    for (int i = std::max(x.lo(), y.lo()); i <= std::min(x.hi(), y.hi()); ++i) {
        if (x.dim_at(i) == 0 || y.dim_at(i) == 0)
            continue;
        int eq = sys.add_equation(y.dim_at(i), x.dim_at(i));
        sys.add_rhs(eq, f.component_at(i));
        if (auto it = s_of.find(i); it != s_of.end())
            sys.add_term(eq, it->second, y.diff_at(i - 1), ExactMatrix::identity(x.domain(), x.dim_at(i)));
        if (auto it = s_of.find(i + 1); it != s_of.end())
            sys.add_term(eq, it->second, ExactMatrix::identity(x.domain(), y.dim_at(i)), x.diff_at(i));
    }
    return sys.solve_any().has_value();
}

// ---------------------------------------------------------------------------
// suite plumbing
// ---------------------------------------------------------------------------

std::string describe(const NComplex& x, const std::string& label) {
    return label + " = " + to_json_string(x);
}

std::string describe(const ChainMap& f, const std::string& label) {
    return label + " = " + to_json_string(f);
}

using TrialFn = std::function<std::optional<std::string>(Rng&)>;

// joint search for a chain map r : C -> Y and witness t with r u ~ 1 realized
// by t; returns nullopt when no homotopy retraction exists
std::optional<std::pair<ChainMap, Homotopy>> find_homotopy_retraction(const NComplex& c, const NComplex& y,
                                                                      const ChainMap& u) {
    const int n = y.n();
    const CoefficientDomain& dom = y.domain();
    MapVarSystem sys(dom);
    std::map<int, int> r_of, t_of;
    for (int m = std::max(c.lo(), y.lo()); m <= std::min(c.hi(), y.hi()); ++m)
        if (c.dim_at(m) > 0 && y.dim_at(m) > 0)
            r_of[m] = sys.add_var(y.dim_at(m), c.dim_at(m));
    for (int k = std::max(y.lo(), y.lo() + n - 1); k <= std::min(y.hi(), y.hi() + n - 1); ++k)
        if (y.dim_at(k) > 0 && y.dim_at(k - n + 1) > 0)
            t_of[k] = sys.add_var(y.dim_at(k - n + 1), y.dim_at(k));

    for (int m = y.lo() - 1; m <= c.hi(); ++m) {
        if (c.dim_at(m) == 0 || y.dim_at(m + 1) == 0)
            continue;
        int eq = sys.add_equation(y.dim_at(m + 1), c.dim_at(m));
        if (auto it = r_of.find(m); it != r_of.end())
            sys.add_term(eq, it->second, y.diff_at(m), ExactMatrix::identity(dom, c.dim_at(m)));
        if (auto it = r_of.find(m + 1); it != r_of.end())
            sys.add_term(eq, it->second, -ExactMatrix::identity(dom, y.dim_at(m + 1)), c.diff_at(m));
    }
    // r^i u^i + realize(t)^i = id
    for (int i = y.lo(); i <= y.hi(); ++i) {
        if (y.dim_at(i) == 0)
            continue;
        int eq = sys.add_equation(y.dim_at(i), y.dim_at(i));
        sys.add_rhs(eq, ExactMatrix::identity(dom, y.dim_at(i)));
        if (auto it = r_of.find(i); it != r_of.end())
            sys.add_term(eq, it->second, ExactMatrix::identity(dom, y.dim_at(i)), u.component_at(i));
        for (int j = 0; j < n; ++j)
            if (auto it = t_of.find(i + j); it != t_of.end())
                sys.add_term(eq, it->second, composite(y, i - (n - 1 - j), n - 1 - j), composite(y, i, j));
    }

    std::optional<std::vector<ExactMatrix>> sol = sys.solve_any();
    if (!sol)
        return std::nullopt;
    ChainMap r = ChainMap::zero(c, y);
    for (const auto& [deg, var] : r_of)
        r.set_component(deg, (*sol)[static_cast<std::size_t>(var)]);
    Homotopy t = Homotopy::zero(y, y);
    for (const auto& [deg, var] : t_of)
        t.set_witness(deg, (*sol)[static_cast<std::size_t>(var)]);
    return std::make_pair(std::move(r), std::move(t));
}

// --------------------------- individual suites -----------------------------

std::optional<std::string> trial_nilpotency(Rng& rng) {
    ComplexOptions opts; // all four coefficient domains
    NComplex x = random_complex(rng, opts);
    if (!validate(x))
        return describe(x, "generator produced an invalid complex; x");
    if (!validate(suspension(x)))
        return describe(x, "suspension fails the nilpotency law; x");
    if (!validate(inv_suspension(x)))
        return describe(x, "inverse suspension fails the nilpotency law; x");
    HullResult h = hull(x);
    if (!validate(h.complex))
        return describe(x, "hull fails the nilpotency law; x");
    if (!h.embedding.commutes())
        return describe(x, "hull embedding is not a chain map; x");

    NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
    if (!x.domain().is_field())
        return std::nullopt; // chain-map sampling needs a field
    ChainMap f = random_chain_map(rng, x, y);
    if (!f.commutes())
        return describe(f, "sampled map is not a chain map; f");
    ConeResult c = cone(f);
    if (!validate(c.complex))
        return describe(f, "cone fails the nilpotency law; f");
    if (!c.triangle.into_cone.commutes() || !c.triangle.onto_suspension.commutes())
        return describe(f, "triangle legs are not chain maps; f");
    return std::nullopt;
}

std::optional<std::string> trial_remark_amplitude(Rng& rng) {
    NComplex x = random_complex(rng, ComplexOptions{});
    bool all = is_N_exact(x);
    for (int r = 1; r < x.n(); ++r)
        if (is_N_exact(x, ExactnessMode::single(r)) != all)
            return describe(x, "single-amplitude mode r=" + std::to_string(r) + " disagrees; x");
    return std::nullopt;
}

std::optional<std::string> trial_epi_criterion(Rng& rng) {
    NComplex x = random_complex(rng, ComplexOptions{});
    if (epi_criterion_holds(x) != is_N_exact(x))
        return describe(x, "epimorphism criterion disagrees with exactness; x");
    return std::nullopt;
}

std::optional<std::string> trial_cone_contractible(Rng& rng) {
    NComplex x = random_complex(rng, ComplexOptions::small_fields_only());
    if (!is_contractible(cone(ChainMap::identity(x)).complex))
        return describe(x, "cone of the identity is not contractible; x");
    return std::nullopt;
}

std::optional<std::string> trial_lemma24_kernel(Rng& rng) {
    ComplexOptions opts = ComplexOptions::small_fields_only();
    NComplex y = random_complex(rng, opts);
    NComplex x = random_complex_with(rng, y.n(), y.domain(), 2, y.n() + 1);
    NComplex w = inv_suspension(y);
    ChainMap f = rng.in(0, 3) == 0 ? random_witness(rng, w, x).realize() : random_chain_map(rng, w, x);
    DegreewiseSplitSES ses = extension_of(f, y);
    bool splits = split_test(ses).has_value();
    bool null = null_homotopy(f).has_value();
    if (splits != null)
        return describe(f, std::string("split/null-homotopy mismatch: splits=") + (splits ? "1" : "0") + "; f");
    return std::nullopt;
}

std::optional<std::string> trial_lemma41(Rng& rng) {
    ComplexOptions opts = ComplexOptions::small_fields_only();
    NComplex x = random_complex(rng, opts);
    NComplex y = random_complex_with(rng, x.n(), x.domain(), 2, x.n() + 1);
    // null-homotopic maps are exactly the ones whose cone retracts onto y
    ChainMap f = random_witness(rng, x, y).realize();
    ConeResult c = cone(f);
    const ChainMap& u = c.triangle.into_cone;

    auto rt = find_homotopy_retraction(c.complex, y, u);
    if (!rt)
        return describe(f, "no homotopy retraction for the cone of a null-homotopic map; f");
    ChainMap a = strict_retraction(f, rt->first, rt->second);
    if (compose(a, u) != ChainMap::identity(y))
        return describe(f, "synthesized retraction is not strict; f");
    if (!a.commutes())
        return describe(f, "synthesized retraction is not a chain map; f");

    // strict retraction with zero witness reproduces itself
    DegreewiseSplitSES tri = make_dw_split_ses(u, c.triangle.onto_suspension);
    if (std::optional<ChainMap> r0 = split_test(tri)) {
        ChainMap a0 = strict_retraction(f, *r0, Homotopy::zero(y, y));
        if (a0 != *r0)
            return describe(f, "zero-witness synthesis changed a strict retraction; f");
    }
    return std::nullopt;
}

std::optional<std::string> trial_sigma_exact(Rng& rng) {
    static const std::vector<CoefficientDomain> doms{
        CoefficientDomain::prime_field(2), CoefficientDomain::prime_field(3), CoefficientDomain::prime_field(5)};
    int n = rng.in(2, 5);
    const CoefficientDomain& dom = doms[static_cast<std::size_t>(rng.in(0, 2))];
    NComplex x = random_exact_complex(rng, n, dom, rng.in(0, 2));
    if (!is_N_exact(x))
        return describe(x, "exact generator produced an inexact complex; x");
    if (!is_N_exact(suspension(x)))
        return describe(x, "suspension broke exactness; x");
    if (!is_N_exact(inv_suspension(x)))
        return describe(x, "inverse suspension broke exactness; x");
    return std::nullopt;
}

std::optional<std::string> trial_prop31(Rng& rng) {
    ComplexOptions opts = ComplexOptions::fields_only();
    NComplex x = NComplex::zero(2, CoefficientDomain::rationals());
    switch (rng.in(0, 4)) {
    case 0: { // a full disc: exact
        int n = rng.in(2, 5);
        x = disc(n, rng.in(-2, 2), n, static_cast<std::size_t>(rng.in(1, 3)),
                 opts.domains[static_cast<std::size_t>(rng.in(0, 2))]);
        break;
    }
    case 1: { // a stalk or truncated disc: not exact
        int n = rng.in(2, 5);
        x = disc(n, rng.in(-2, 2), rng.in(1, n - 1), static_cast<std::size_t>(rng.in(1, 3)),
                 opts.domains[static_cast<std::size_t>(rng.in(0, 2))]);
        break;
    }
    case 2: { // cones over exact seeds: exact
        int n = rng.in(2, 5);
        x = random_exact_complex(rng, n, opts.domains[static_cast<std::size_t>(rng.in(0, 2))], 1);
        break;
    }
    default:
        x = random_complex(rng, opts);
        break;
    }
    if (prop31_criterion(x) != is_N_exact(x))
        return describe(x, "extension criterion disagrees with exactness; x");
    return std::nullopt;
}

std::optional<std::string> trial_n2_regression(Rng& rng) {
    ComplexOptions opts;
    opts.allowed_n = {2};
    opts.domains.push_back(CoefficientDomain::integers());
    NComplex x = random_complex(rng, opts);

    for (int i = x.lo(); i <= x.hi(); ++i) {
        AmplitudeHomology h = homology(x, i, 1);
        ClassicalHomology ch = classical_homology(x, i);
        if (h.free_rank != ch.free_rank || h.torsion != ch.torsion)
            return describe(x, "amplitude homology disagrees with the classical computation at degree " +
                                   std::to_string(i) + "; x");
    }

    if (suspension(x) != classical_shift(x))
        return describe(x, "suspension disagrees with the classical shift; x");

    NComplex y = random_complex_with(rng, 2, x.domain(), 3, 4);
    ChainMap f = x.domain().is_field() ? random_chain_map(rng, x, y) : random_witness(rng, x, y).realize();
    if (cone(f).complex != classical_cone(f))
        return describe(f, "cone disagrees with the classical cone; f");

    // decision agreement on a small family of maps
    std::vector<ChainMap> probes{f, random_witness(rng, x, y).realize()};
    if (x == y)
        probes.push_back(ChainMap::identity(x));
    ChainMap self = x.domain().is_field() ? random_chain_map(rng, x, x) : ChainMap::identity(x);
    probes.push_back(self);
    for (const ChainMap& g : probes)
        if (null_homotopy(g).has_value() != classical_null_homotopic(g))
            return describe(g, "null-homotopy decision disagrees with the classical equation; g");
    return std::nullopt;
}

std::optional<std::string> trial_extdw_additivity(Rng& rng) {
    ComplexOptions opts = ComplexOptions::small_fields_only();
    NComplex y1 = random_complex(rng, opts);
    NComplex y2 = random_complex_with(rng, y1.n(), y1.domain(), 2, y1.n() + 1);
    NComplex x = random_complex_with(rng, y1.n(), y1.domain(), 2, y1.n() + 1);
    std::size_t lhs = ext_dw_dim(direct_sum(y1, y2), x);
    std::size_t rhs = ext_dw_dim(y1, x) + ext_dw_dim(y2, x);
    if (lhs != rhs)
        return describe(y1, describe(y2, describe(x, "ext_dw is not additive; x") + "; y2") + "; y1");
    return std::nullopt;
}

const std::map<std::string, TrialFn>& suite_table() {
    static const std::map<std::string, TrialFn> table{
        {"nilpotency", trial_nilpotency},
        {"remark-amplitude", trial_remark_amplitude},
        {"epi-criterion", trial_epi_criterion},
        {"cone-contractible", trial_cone_contractible},
        {"lemma24-kernel", trial_lemma24_kernel},
        {"lemma41", trial_lemma41},
        {"sigma-exact", trial_sigma_exact},
        {"prop31", trial_prop31},
        {"n2-regression", trial_n2_regression},
        {"extdw-additivity", trial_extdw_additivity},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "nilpotency",    "remark-amplitude", "epi-criterion", "cone-contractible", "lemma24-kernel",
        "lemma41",       "sigma-exact",      "prop31",        "n2-regression",     "extdw-additivity",
    };
    return names;
}

VerifyReport run_suite(const std::string& name, std::uint64_t seed, int trials) {
    auto it = suite_table().find(name);
    if (it == suite_table().end())
        throw Error("unknown suite \"" + name + "\"");
    VerifyReport report;
    report.suite = name;
    report.seed = seed;
    report.trials = trials;
    auto start = std::chrono::steady_clock::now();
    Rng base(seed);
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = base.fork(static_cast<std::uint64_t>(trial));
        std::optional<std::string> bad;
        try {
            bad = it->second(rng);
        } catch (const Error& e) {
            bad = std::string("exception: ") + e.what();
        }
        if (bad)
            report.failures.push_back({trial, *bad});
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace ncx
