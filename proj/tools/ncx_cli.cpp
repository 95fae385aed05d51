// Command-line front end: loads complex / chain-map documents, runs the
// library operations, and drives the seeded verification suites.
//
// Exit codes: 0 success (and mathematical "true"), 1 mathematical "false" or
// suite failures, 2 malformed input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncx/classes.hpp"
#include "ncx/homotopy.hpp"
#include "ncx/io.hpp"
#include "ncx/ncomplex.hpp"
#include "ncx/triangle.hpp"
#include "ncx/verify.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;

struct Options {
    std::string in, in2;
    std::string mode = "all";
    std::string base = "all";
    std::uint64_t seed = 0;
    int trials = 100;
    bool json = false;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("NCOMPLEX_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

ordered_json homology_row(const ncx::AmplitudeHomology& h) {
    ordered_json row;
    row["i"] = h.degree;
    row["r"] = h.amplitude;
    row["free_rank"] = h.free_rank;
    ordered_json tor = ordered_json::array();
    for (const ncx::Int& t : h.torsion)
        tor.push_back(t.get_str());
    row["torsion"] = tor;
    return row;
}

std::string torsion_text(const std::vector<ncx::Int>& torsion) {
    std::string s = "[";
    for (std::size_t k = 0; k < torsion.size(); ++k)
        s += (k ? "," : "") + torsion[k].get_str();
    return s + "]";
}

int cmd_validate(const Options& o) {
    ncx::NComplex x = ncx::load_complex_unchecked(o.in);
    std::optional<int> bad = ncx::first_nilpotency_failure(x);
    if (o.json) {
        ordered_json j;
        j["valid"] = !bad.has_value();
        if (bad)
            j["first_failure_degree"] = *bad;
        std::cout << j.dump(2) << "\n";
    } else if (bad) {
        std::cout << "false (nonzero " << x.n() << "-fold composite starting at degree " << *bad << ")\n";
    } else {
        std::cout << "true\n";
    }
    return bad ? kExitFalse : kExitTrue;
}

int cmd_homology(const Options& o) {
    ncx::NComplex x = ncx::load_complex(o.in);
    ordered_json rows = ordered_json::array();
    for (int i = x.lo(); i <= x.hi(); ++i)
        for (int r = 1; r < x.n(); ++r) {
            ncx::AmplitudeHomology h = ncx::homology(x, i, r);
            if (h.is_zero())
                continue;
            if (o.json)
                rows.push_back(homology_row(h));
            else
                std::cout << "(" << h.degree << ", " << h.amplitude << ", " << h.free_rank << ", "
                          << torsion_text(h.torsion) << ")\n";
        }
    if (o.json)
        std::cout << rows.dump(2) << "\n";
    return kExitTrue;
}

int cmd_exact(const Options& o) {
    ncx::NComplex x = ncx::load_complex(o.in);
    ncx::ExactnessMode mode = ncx::ExactnessMode::all();
    if (o.mode != "all")
        mode = ncx::ExactnessMode::single(std::stoi(o.mode));
    std::optional<std::pair<int, int>> bad = ncx::first_inexactness(x, mode);
    if (o.json) {
        ordered_json j;
        j["exact"] = !bad.has_value();
        if (bad) {
            j["i"] = bad->first;
            j["r"] = bad->second;
        }
        std::cout << j.dump(2) << "\n";
    } else if (bad) {
        std::cout << "false (H^" << bad->first << "_" << bad->second << " is nonzero)\n";
    } else {
        std::cout << "true\n";
    }
    return bad ? kExitFalse : kExitTrue;
}

int cmd_cone(const Options& o) {
    ncx::ChainMap f = ncx::load_chain_map(o.in);
    std::cout << ncx::to_json_string(ncx::cone(f).complex);
    return kExitTrue;
}

int cmd_susp(const Options& o, bool inverse) {
    ncx::NComplex x = ncx::load_complex(o.in);
    std::cout << ncx::to_json_string(inverse ? ncx::inv_suspension(x) : ncx::suspension(x));
    return kExitTrue;
}

int cmd_hull(const Options& o) {
    ncx::NComplex x = ncx::load_complex(o.in);
    std::cout << ncx::to_json_string(ncx::hull(x).complex);
    return kExitTrue;
}

int cmd_homotopic(const Options& o) {
    ncx::ChainMap f = ncx::load_chain_map(o.in);
    ncx::ChainMap g = ncx::load_chain_map(o.in2);
    bool eq = ncx::homotopic(f, g);
    if (o.json) {
        ordered_json j;
        j["homotopic"] = eq;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (eq ? "true" : "false") << "\n";
    }
    return eq ? kExitTrue : kExitFalse;
}

int cmd_homk(const Options& o) {
    ncx::NComplex x = ncx::load_complex(o.in);
    ncx::NComplex y = ncx::load_complex(o.in2);
    ncx::HomKSpace h = ncx::hom_k(x, y);
    if (o.json) {
        ordered_json j;
        j["dim_chain_maps"] = h.dim_chain_maps;
        j["dim_null_homotopic"] = h.dim_null_homotopic;
        j["dim_homotopy_classes"] = h.dim_homotopy_classes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chain maps: " << h.dim_chain_maps << "\nnull-homotopic: " << h.dim_null_homotopic
                  << "\nhomotopy classes: " << h.dim_homotopy_classes << "\n";
    }
    return kExitTrue;
}

int cmd_extdw(const Options& o) {
    ncx::NComplex y = ncx::load_complex(o.in);
    ncx::NComplex x = ncx::load_complex(o.in2);
    std::size_t d = ncx::ext_dw_dim(y, x);
    if (o.json) {
        ordered_json j;
        j["ext_dw_dim"] = d;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << d << "\n";
    }
    return kExitTrue;
}

int cmd_classcheck(const Options& o) {
    ncx::NComplex x = ncx::load_complex(o.in);
    ncx::ClassSpec spec;
    if (o.mode == "degreewise")
        spec.variant = ncx::ClassVariant::Degreewise;
    else if (o.mode == "exact-tilde")
        spec.variant = ncx::ClassVariant::ExactTilde;
    else if (o.mode == "ex")
        spec.variant = ncx::ClassVariant::Ex;
    else
        throw ncx::ParseError("classcheck --mode must be degreewise, exact-tilde or ex");
    if (o.base == "all")
        spec.base = ncx::BaseClass::All;
    else if (o.base == "free")
        spec.base = ncx::BaseClass::Free;
    else
        throw ncx::ParseError("classcheck --base must be all or free");
    bool in = ncx::class_membership(x, spec);
    if (o.json) {
        ordered_json j;
        j["member"] = in;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (in ? "true" : "false") << "\n";
    }
    return in ? kExitTrue : kExitFalse;
}

int cmd_prop31(const Options& o) {
    ncx::NComplex x = ncx::load_complex(o.in);
    bool holds = ncx::prop31_criterion(x);
    if (o.json) {
        ordered_json j;
        j["criterion"] = holds;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (holds ? "true" : "false") << "\n";
    }
    return holds ? kExitTrue : kExitFalse;
}

int cmd_verify(const Options& o, const std::string& suite) {
    ncx::VerifyReport rep = ncx::run_suite(suite, o.seed, o.trials);
    if (o.json) {
        ordered_json j;
        j["suite"] = rep.suite;
        j["seed"] = rep.seed;
        j["trials"] = rep.trials;
        j["elapsed_seconds"] = rep.elapsed_seconds;
        ordered_json fails = ordered_json::array();
        for (const ncx::VerifyFailure& f : rep.failures) {
            ordered_json e;
            e["trial"] = f.trial;
            e["counterexample"] = f.counterexample;
            fails.push_back(e);
        }
        j["failures"] = fails;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "suite: " << rep.suite << "\nseed: " << rep.seed << "\ntrials: " << rep.trials
                  << "\nfailures: " << rep.failures.size() << "\nelapsed: " << rep.elapsed_seconds << "s\n";
        for (const ncx::VerifyFailure& f : rep.failures)
            std::cout << "  trial " << f.trial << ": " << f.counterexample << "\n";
    }
    return rep.ok() ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact N-complex toolkit"};
    app.require_subcommand(1);

    Options o;
    o.seed = default_seed();
    std::string suite;

    auto add_common = [&](CLI::App* cmd, bool needs_in, bool needs_in2) {
        if (needs_in)
            cmd->add_option("--in", o.in, "input document")->required();
        if (needs_in2)
            cmd->add_option("--in2", o.in2, "second input document")->required();
        cmd->add_flag("--json", o.json, "machine-readable output");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the nilpotency law");
    add_common(validate, true, false);
    CLI::App* homologyc = app.add_subcommand("homology", "list nonzero amplitude homology");
    add_common(homologyc, true, false);
    CLI::App* exact = app.add_subcommand("exact", "test N-exactness");
    add_common(exact, true, false);
    exact->add_option("--mode", o.mode, "\"all\" or a single amplitude r");
    CLI::App* conec = app.add_subcommand("cone", "mapping cone of a chain map");
    add_common(conec, true, false);
    CLI::App* susp = app.add_subcommand("susp", "suspension");
    add_common(susp, true, false);
    CLI::App* isusp = app.add_subcommand("isusp", "inverse suspension");
    add_common(isusp, true, false);
    CLI::App* hullc = app.add_subcommand("hull", "contractible hull");
    add_common(hullc, true, false);
    CLI::App* homotopicc = app.add_subcommand("homotopic", "decide homotopy of two chain maps");
    add_common(homotopicc, true, true);
    CLI::App* homk = app.add_subcommand("homk", "hom-space dimensions in the homotopy category");
    add_common(homk, true, true);
    CLI::App* extdw = app.add_subcommand("extdw", "degreewise-split extension dimension");
    add_common(extdw, true, true);
    CLI::App* classcheck = app.add_subcommand("classcheck", "class membership predicates");
    add_common(classcheck, true, false);
    classcheck->add_option("--mode", o.mode, "degreewise | exact-tilde | ex")->required();
    classcheck->add_option("--base", o.base, "all | free");
    CLI::App* prop31c = app.add_subcommand("prop31", "disc extension criterion for exactness");
    add_common(prop31c, true, false);
    CLI::App* verifyc = app.add_subcommand("verify", "run a seeded verification suite");
    verifyc->add_option("suite", suite, "suite name")->required();
    verifyc->add_option("--seed", o.seed, "random seed (default: NCOMPLEX_SEED or 0)");
    verifyc->add_option("--trials", o.trials, "number of trials");
    verifyc->add_flag("--json", o.json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitTrue : kExitInput;
    }

    try {
        if (validate->parsed())
            return cmd_validate(o);
        if (homologyc->parsed())
            return cmd_homology(o);
        if (exact->parsed())
            return cmd_exact(o);
        if (conec->parsed())
            return cmd_cone(o);
        if (susp->parsed())
            return cmd_susp(o, false);
        if (isusp->parsed())
            return cmd_susp(o, true);
        if (hullc->parsed())
            return cmd_hull(o);
        if (homotopicc->parsed())
            return cmd_homotopic(o);
        if (homk->parsed())
            return cmd_homk(o);
        if (extdw->parsed())
            return cmd_extdw(o);
        if (classcheck->parsed())
            return cmd_classcheck(o);
        if (prop31c->parsed())
            return cmd_prop31(o);
        if (verifyc->parsed())
            return cmd_verify(o, suite);
    } catch (const ncx::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ncx::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ncx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
