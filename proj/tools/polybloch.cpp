#include <CLI11.hpp>

#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "polybloch/io.hpp"
#include "polybloch/lifted_polylog.hpp"
#include "polybloch/quiver_engine.hpp"
#include "polybloch/realization_verify.hpp"
#include "polybloch/regulator_maps.hpp"
#include "polybloch/relation_discovery.hpp"

using namespace pb;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Global {
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool pretty = false;
};

void emit(const Global& g, json j) {
    json out;
    out["seed"] = g.seed;
    for (auto& [k, v] : j.items()) out[k] = v;
    std::cout << out.dump(g.pretty ? 2 : -1) << "\n";
}

cplx parse_complex(const std::string& s) {
    // "x", "x,y" or "x+yi"
    std::string t = s;
    std::erase(t, ' ');
    try {
        auto comma = t.find(',');
        if (comma != std::string::npos) return {std::stod(t.substr(0, comma)), std::stod(t.substr(comma + 1))};
        if (!t.empty() && t.back() == 'i') {
            std::string body = t.substr(0, t.size() - 1);
            std::size_t split = std::string::npos;
            for (std::size_t k = 1; k < body.size(); ++k)
                if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') split = k;
            if (split == std::string::npos) return {0.0, body.empty() || body == "+" ? 1.0 : body == "-" ? -1.0 : std::stod(body)};
            std::string im = body.substr(split);
            return {std::stod(body.substr(0, split)), im == "+" ? 1.0 : im == "-" ? -1.0 : std::stod(im)};
        }
        std::size_t used = 0;
        double x = std::stod(t, &used);
        if (used != t.size()) throw UsageError("bad complex number '" + s + "'");
        return {x, 0.0};
    } catch (const std::logic_error&) {
        throw UsageError("bad complex number '" + s + "'");
    }
}

std::pair<int, int> parse_signs(const std::string& s) {
    if (s.size() != 2) throw UsageError("--signs takes two characters from {+,-}");
    auto one = [&](char c) {
        if (c == '+') return 1;
        if (c == '-') return -1;
        throw UsageError("--signs takes two characters from {+,-}");
    };
    return {one(s[0]), one(s[1])};
}

Side parse_side(const std::string& s) {
    if (s == "above") return Side::Above;
    if (s == "below") return Side::Below;
    if (s == "none" || s.empty()) return Side::None;
    throw UsageError("--side must be above, below or none");
}

// ---------------------------------------------------------------- eval

struct EvalOpts {
    int n = 2;
    std::string z = "0.5", signs = "++", side = "none", func = "lhat";
    long p = 0, q = 0;
};

int run_eval(const Global& g, const EvalOpts& o) {
    if (o.n < 2) throw UsageError("--n must be at least 2");
    cplx z = parse_complex(o.z);
    auto [s1, s2] = parse_signs(o.signs);
    ExtendedPoint pt{s1, s2, z, parse_side(o.side), o.p, o.q};
    json j;
    j["command"] = "eval";
    j["function"] = o.func;
    j["n"] = o.n;
    j["z"] = cplx_to_json(z);
    try {
        if (o.func == "lhat") {
            if (pt.needs_side() && pt.side == Side::None) throw UsageError("z lies on a cut: pass --side above|below");
            j["p"] = o.p;
            j["q"] = o.q;
            j["signs"] = o.signs;
            j["value"] = cplx_to_json(lhat(o.n, pt));
            auto [u, v] = pt.to_uv();
            j["u"] = cplx_to_json(u);
            j["v"] = cplx_to_json(v);
        } else if (o.func == "li") {
            j["value"] = cplx_to_json(li_principal(o.n, z, parse_side(o.side)));
        } else if (o.func == "zagier") {
            j["value"] = zagier_L(o.n, z);
        } else {
            throw UsageError("--function must be lhat, li or zagier");
        }
    } catch (const BranchPoint& e) {
        throw UsageError(e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    emit(g, j);
    return 0;
}

// ---------------------------------------------------------------- quiver selection

struct QuiverOpts {
    std::vector<int> grassmannian;
    std::string file;
    bool a2 = false;
    std::size_t cap = 100000;
};

struct QuiverChoice {
    std::optional<GrassmannianClass> gc;
    Quiver q;
    std::string label;
};

QuiverChoice choose_quiver(const QuiverOpts& o) {
    int chosen = int(!o.grassmannian.empty()) + int(!o.file.empty()) + int(o.a2);
    if (chosen != 1) throw UsageError("pick exactly one of --grassmannian P Q, --quiver FILE, --a2");
    QuiverChoice c;
    if (!o.grassmannian.empty()) {
        int p = o.grassmannian[0], n = o.grassmannian[1];
        if (p < 1 || n <= p) throw UsageError("--grassmannian needs 0 < P < Q");
        c.label = "Gr(" + std::to_string(p) + "," + std::to_string(n) + ")";
        try {
            c.gc = grassmannian_class(p, n - p, o.cap);
        } catch (const CapExceeded& e) {
            throw UsageError(std::string(e.what()) + " (mutation class is too large; raise --cap)");
        }
        c.q = c.gc->mc.q0;
    } else if (o.a2) {
        c.q = Quiver(2);
        c.q.add_arrow(0, 1);
        c.label = "A2";
    } else {
        try {
            c.q = quiver_from_json(read_json_file(o.file));
        } catch (const json::exception& e) {
            throw UsageError(o.file + ": " + e.what());
        } catch (const FormatError& e) {
            throw UsageError(e.what());
        }
        c.label = o.file;
    }
    return c;
}

void add_quiver_flags(CLI::App* sub, QuiverOpts& o) {
    sub->add_option("--grassmannian", o.grassmannian, "Gr(P,Q) initial quiver")->expected(2);
    sub->add_option("--quiver", o.file, "quiver DSL JSON file");
    sub->add_flag("--a2", o.a2, "the A2 quiver");
    sub->add_option("--cap", o.cap, "maximal number of seeds");
}

// ---------------------------------------------------------------- quiver

struct QuiverCmd {
    QuiverOpts q;
    std::vector<std::size_t> mutate;
    bool coords = false;
};

int run_quiver(const Global& g, const QuiverCmd& o) {
    auto c = choose_quiver(o.q);
    json j;
    j["command"] = "quiver";
    j["quiver"] = c.label;
    j["initial"] = quiver_to_json(c.q);
    if (!o.mutate.empty()) {
        ACoordRegistry reg(c.q.m);
        auto s = initial_seed(c.q, reg);
        for (auto k : o.mutate) {
            if (k >= c.q.m) throw UsageError("--mutate vertex out of range");
            try {
                s = mutate_seed(s, k, reg);
            } catch (const FrozenVertex& e) {
                throw UsageError(e.what());
            }
        }
        json coords = json::array();
        for (auto id : s.coords) coords.push_back(reg.poly(id).to_string(c.q.names));
        j["mutated"] = {{"sequence", o.mutate}, {"quiver", quiver_to_json(s.quiver)}, {"coordinates", coords}};
    } else {
        MutationClass mc;
        try {
            mc = c.gc ? c.gc->mc : mutation_class(c.q, o.q.cap);
        } catch (const CapExceeded& e) {
            throw UsageError(std::string(e.what()) + " (raise --cap)");
        }
        j["seeds"] = mc.seeds.size();
        j["a_coordinates"] = mc.reg.size();
        j["x_coordinates"] = distinct_x_coordinates(mc).size();
        if (c.gc && c.gc->gq.p == 3 && c.gc->gq.q == 3) {
            auto sizes = x_orbit_sizes(*c.gc, {cyclic_perm(6), reflection_perm(6)});
            std::sort(sizes.rbegin(), sizes.rend());
            j["dihedral_orbit_sizes"] = sizes;
        }
        if (o.coords) {
            json names = json::array();
            for (std::size_t i = 0; i < mc.reg.size(); ++i)
                names.push_back(c.gc ? c.gc->names.name(i) : mc.reg.poly(i).to_string(mc.q0.names));
            j["a_coordinate_names"] = names;
            json seeds = json::array();
            for (std::size_t s = 0; s < mc.seeds.size(); ++s) seeds.push_back(seed_to_json(mc, s));
            j["seed_dump"] = seeds;
        }
    }
    emit(g, j);
    return 0;
}

// ---------------------------------------------------------------- discover

struct DiscoverCmd {
    QuiverOpts q;
    int weight = 2;
};

int run_discover(const Global& g, const DiscoverCmd& o) {
    if (o.weight < 2) throw UsageError("--weight must be at least 2");
    auto c = choose_quiver(o.q);
    XhatBasis b = c.gc ? xhat_basis(*c.gc, o.weight) : xhat_basis(c.q, o.weight, o.q.cap);
    auto rels = discover_kernel(b);
    json j;
    j["command"] = "discover";
    j["quiver"] = c.label;
    j["provenance"] = {{"initial_quiver", quiver_to_json(c.q)}, {"seed_path", "breadth-first mutation class"}};
    j["weight"] = o.weight;
    j["dim"] = b.dim();
    j["kernel_dim"] = rels.size();
    json rj = json::array();
    for (auto& r : rels) {
        json one = relation_to_json(r);
        one["term_count"] = r.size();
        rj.push_back(one);
    }
    j["relations"] = rj;
    emit(g, j);
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyCmd {
    std::string scenario, relation, realization;
    int n = 0;
    int samples = 10;
    bool all = false;
};

std::vector<ScenarioReport> run_scenarios(const std::vector<std::string>& names, const Global& g, int samples) {
    std::vector<ScenarioReport> out(names.size());
    unsigned jobs = std::max(1u, g.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < names.size(); ++i) out[i] = run_scenario(names[i], g.seed, samples);
        return out;
    }
    // each scenario seeds its own RNG, so the split does not change results
    std::vector<std::future<void>> fs;
    for (unsigned w = 0; w < jobs; ++w)
        fs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < names.size(); i += jobs) out[i] = run_scenario(names[i], g.seed, samples);
        }));
    for (auto& f : fs) f.get();
    return out;
}

int run_verify(const Global& g, const VerifyCmd& o) {
    json j;
    j["command"] = "verify";
    if (!o.relation.empty() || !o.realization.empty()) {
        if (o.relation.empty() || o.realization.empty()) throw UsageError("--relation and --realization go together");
        if (o.n < 2) throw UsageError("--n is required with --relation");
        RelationSum alpha;
        Realization r;
        try {
            alpha = relation_from_json(read_json_file(o.relation));
            r = realization_from_json(read_json_file(o.realization));
        } catch (const json::exception& e) {
            throw UsageError(e.what());
        } catch (const FormatError& e) {
            throw UsageError(e.what());
        }
        for (auto& [name, v] : r.values)
            if (!alpha.reg.find(name)) throw UsageError("realization names unknown generator " + name);
        auto diff = is_differential_relation(o.n, alpha);
        auto chk = check_realization(alpha, r);
        j["differential"] = diff;
        j["realization_ok"] = chk.ok;
        j["lift_residual"] = chk.lift_residual;
        j["term_residuals"] = chk.term_residuals;
        bool ok = diff && chk.ok;
        if (chk.ok) {
            try {
                auto ev = evaluate_relation(o.n, alpha, r);
                j["value"] = cplx_to_json(ev.value);
                j["lattice_unit"] = cplx_to_json(lattice_unit(o.n));
                auto amb = ambiguity_vector(o.n, alpha);
                j["proper"] = amb.proper;
                if (amb.proper) j["flip_deviation"] = flip_invariance_check(o.n, alpha, r);
            } catch (const ComponentMismatch& e) {
                j["error"] = e.what();
                ok = false;
            }
        }
        j["pass"] = ok;
        emit(g, j);
        return ok ? 0 : 1;
    }
    std::vector<std::string> names;
    if (o.all) {
        names = scenario_names();
    } else if (!o.scenario.empty()) {
        auto known = scenario_names();
        if (std::find(known.begin(), known.end(), o.scenario) == known.end())
            throw UsageError("unknown scenario '" + o.scenario + "'");
        names = {o.scenario};
    } else {
        throw UsageError("verify needs --scenario NAME, --all, or --relation/--realization");
    }
    if (o.samples < 1) throw UsageError("--samples must be positive");
    auto reps = run_scenarios(names, g, o.samples);
    json arr = json::array();
    bool ok = true;
    for (auto& r : reps) {
        arr.push_back(scenario_to_json(r));
        ok = ok && r.pass;
    }
    j["scenarios"] = arr;
    j["pass"] = ok;
    emit(g, j);
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- regulator

struct RegulatorCmd {
    std::string matrix;
    int configs = 3;
};

json regulator_one(const CMatrix& m) {
    json j;
    j["matrix"] = matrix_to_json(m);
    j["generic"] = make_config(m).generic;
    if (!make_config(m).generic) {
        j["pass"] = false;
        return j;
    }
    bool ok = true;
    if (m.cols() == 6) {
        auto c = consistency_checks(m);
        auto a = compare_alt6(m);
        j["L2_R1"] = c.L2_R1;
        j["L2_R2"] = c.L2_R2;
        j["L2_R1i"] = c.L2_R1i;
        j["L2_R2i"] = c.L2_R2i;
        j["x_vs_R1"] = comparison_to_json(c.x_vs_R1);
        j["y_vs_R2"] = comparison_to_json(c.y_vs_R2);
        j["alt6_raw"] = comparison_to_json(a.raw);
        j["alt6_triple_part"] = comparison_to_json(a.triple_part);
        j["alt6_modulo_inversion"] = comparison_to_json(a.modulo_inversion);
        j["L3_g5"] = L3_of_g5(m);
        j["lhat3_f5"] = cplx_to_json(lhat3_of_f5(m));
        ok = c.pass && a.pass();
    } else if (m.cols() == 7) {
        auto b = boundary_check(m);
        j["lhat3_f5_boundary_residual"] = b.lhat_residual;
        j["lhat3_f5_boundary_multiple"] = b.multiple;
        j["L3_g5_boundary"] = b.L3_g5;
        ok = b.lhat_residual < 1e-7 && b.L3_g5 < 1e-7;
    } else if (m.cols() == 5) {
        j["cross_ratio"] = cplx_to_json(cross_ratio_projected(m));
    } else {
        throw UsageError("regulator checks take 3x5, 3x6 or 3x7 matrices");
    }
    j["pass"] = ok;
    return j;
}

int run_regulator(const Global& g, const RegulatorCmd& o) {
    json j;
    j["command"] = "regulator";
    bool ok = true;
    json arr = json::array();
    if (!o.matrix.empty()) {
        CMatrix m;
        try {
            m = matrix_from_json(read_json_file(o.matrix));
        } catch (const json::exception& e) {
            throw UsageError(e.what());
        } catch (const FormatError& e) {
            throw UsageError(e.what());
        }
        if (m.rows() != 3) throw UsageError("configuration must have 3 rows");
        try {
            arr.push_back(regulator_one(m));
        } catch (const Degenerate& e) {
            arr.push_back({{"error", e.what()}, {"pass", false}});
        }
    } else {
        if (o.configs < 1) throw UsageError("--configs must be positive");
        std::mt19937_64 rng(g.seed * 1000003 + 11);
        for (int k : {6, 7})
            for (int t = 0; t < o.configs; ++t) {
                CMatrix m;
                do m = random_matrix(3, k, rng);
                while (!make_config(m).generic);
                arr.push_back(regulator_one(m));
            }
        j["boundary_squared_zero"] = boundary_squared(6).empty() && boundary_squared(7).empty();
        ok = j["boundary_squared_zero"].get<bool>();
    }
    for (auto& r : arr) ok = ok && r["pass"].get<bool>();
    j["checks"] = arr;
    j["pass"] = ok;
    emit(g, j);
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- suite

int run_suite(const Global& g, bool as_json) {
    auto reps = run_scenarios(scenario_names(), g, 10);
    auto reg = regulator_suite(g.seed);
    bool ok = reg.pass;
    for (auto& r : reps) ok = ok && r.pass;
    if (as_json) {
        json j;
        j["command"] = "suite";
        json arr = json::array();
        for (auto& r : reps) arr.push_back(scenario_to_json(r));
        j["scenarios"] = arr;
        j["regulator"] = {{"boundary_squared_zero", reg.dd_zero},
                          {"max_L2", reg.max_L2},
                          {"multisets_match", reg.multisets_match},
                          {"max_boundary_residual", reg.max_boundary_residual},
                          {"max_L3_boundary", reg.max_L3_boundary},
                          {"pass", reg.pass}};
        j["pass"] = ok;
        emit(g, j);
        return ok ? 0 : 1;
    }
    std::cout << "seed " << g.seed << "\n";
    std::cout << std::left << std::setw(24) << "scenario" << std::setw(8) << "samples" << std::setw(14) << "max residual"
              << "result\n";
    for (auto& r : reps) {
        std::ostringstream res;
        res << std::scientific << std::setprecision(3) << r.max_residual;
        std::cout << std::left << std::setw(24) << r.name << std::setw(8) << r.samples << std::setw(14) << res.str()
                  << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    std::ostringstream res;
    res << std::scientific << std::setprecision(3)
        << std::max({reg.max_L2, reg.max_boundary_residual, reg.max_L3_boundary});
    std::cout << std::left << std::setw(24) << "regulator" << std::setw(8) << "10+3" << std::setw(14) << res.str()
              << (reg.pass ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polybloch: lifted polylogarithms, cluster relations and regulator checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--seed", g.seed, "RNG seed for random points (default 0)");
    app.add_option("--jobs", g.jobs, "worker threads for scenario runs")->check(CLI::PositiveNumber);
    app.add_flag("--pretty", g.pretty, "indent JSON output");

    EvalOpts eo;
    auto* ev = app.add_subcommand("eval", "evaluate L^_n, Li_n or the single-valued L_n");
    ev->add_option("--n", eo.n, "weight")->required();
    ev->add_option("--z", eo.z, "point: x, x,y or x+yi")->required();
    ev->add_option("--p", eo.p, "branch index p");
    ev->add_option("--q", eo.q, "branch index q");
    ev->add_option("--signs", eo.signs, "component, e.g. ++ or -+");
    ev->add_option("--side", eo.side, "above|below for real z on a cut");
    ev->add_option("--function", eo.func, "lhat (default), li or zagier");

    QuiverCmd qc;
    auto* qu = app.add_subcommand("quiver", "mutation class counts, coordinates, or a mutation sequence");
    add_quiver_flags(qu, qc.q);
    qu->add_option("--mutate", qc.mutate, "vertex sequence to mutate (0-based)");
    qu->add_flag("--coords", qc.coords, "dump every seed");

    DiscoverCmd dc;
    auto* di = app.add_subcommand("discover", "kernel of the w-map on the quotient X^ basis");
    add_quiver_flags(di, dc.q);
    di->add_option("--weight", dc.weight, "weight n")->required();

    VerifyCmd vc;
    auto* ve = app.add_subcommand("verify", "numeric verification of relations");
    ve->add_option("--scenario", vc.scenario, "named scenario");
    ve->add_flag("--all", vc.all, "all scenarios");
    ve->add_option("--samples", vc.samples, "realizations per scenario");
    ve->add_option("--relation", vc.relation, "RelationSum JSON");
    ve->add_option("--realization", vc.realization, "Realization JSON");
    ve->add_option("--n", vc.n, "weight for --relation");

    RegulatorCmd rc;
    auto* re = app.add_subcommand("regulator", "Grassmannian regulator checks");
    re->add_option("--matrix", rc.matrix, "3xk configuration JSON (k = 5, 6, 7)");
    re->add_option("--configs", rc.configs, "random configurations per size");

    bool suite_json = false;
    auto* su = app.add_subcommand("suite", "all scenarios and regulator checks");
    su->add_flag("--json", suite_json, "JSON instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ev) return run_eval(g, eo);
        if (*qu) return run_quiver(g, qc);
        if (*di) return run_discover(g, dc);
        if (*ve) return run_verify(g, vc);
        if (*re) return run_regulator(g, rc);
        if (*su) return run_suite(g, suite_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
