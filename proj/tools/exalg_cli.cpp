// Command-line surface for the exact nonassociative algebra library:
// element evaluation, ideal and flag-space queries, and the verification
// suites.  Exit codes: 0 success, 1 a mathematical check came out false,
// 2 usage or parse errors.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "exalg/io.hpp"
#include "exalg/verify.hpp"

using namespace exalg;

namespace {

struct Config {
    std::string zeta = "1";
    std::string gamma = "1,1,1";
    long quad_d = 0; // 0 = plain rational contexts
    std::uint64_t seed = 42;
    bool strict_paper = false;

    std::array<Rat, 3> gamma_rat() const {
        std::array<Rat, 3> g;
        std::stringstream ss(gamma);
        std::string part;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ss, part, ',')) throw ParseError("--gamma needs three entries");
            g[i] = Rat::from_string(part);
            if (g[i].is_zero()) throw ParseError("--gamma entries must be nonzero");
        }
        if (std::getline(ss, part, ',')) throw ParseError("--gamma needs exactly three entries");
        return g;
    }

    Rat zeta_rat() const {
        Rat z = Rat::from_string(zeta);
        if (z.is_zero()) throw ParseError("--zeta must be nonzero");
        return z;
    }

    void check_quad() const {
        if (quad_d != 0 && !quad_param_ok(quad_d))
            throw ParseError("--quad-d must be a nonsquare nonzero integer");
    }
};

template <ScalarField S>
std::vector<S> load_coords(const std::string& path, int n, long quad_d) {
    return parse_coords<S>(read_file(path), n, quad_d);
}

RatSubspace load_subspace(const std::string& path, int ambient) {
    std::istringstream in(read_file(path));
    RatSubspace sub = read_subspace<Rat>(in, 0);
    if (sub.ambient_dim() != ambient)
        throw DimensionMismatch("expected ambient dimension " + std::to_string(ambient));
    return sub;
}

// eval on the Albert layer, generic over the scalar field.
template <ScalarField S>
int eval_albert(const Config& cfg, const std::string& expr,
                const std::vector<std::string>& files) {
    std::array<S, 3> gamma;
    auto g = cfg.gamma_rat();
    for (int i = 0; i < 3; ++i) gamma[i] = S(g[i]);
    AlbertCtx<S> J(gamma);
    auto elem = [&](int i) {
        return AlbertElem<S>::from_coords(load_coords<S>(files.at(i), kAlbertDim, cfg.quad_d));
    };
    if (expr == "norm") {
        std::cout << scalar_str<S>(J.norm(elem(0))) << "\n";
    } else if (expr == "trace") {
        std::cout << scalar_str<S>(J.trace(elem(0))) << "\n";
    } else if (expr == "sharp") {
        std::cout << coords_str<S>(J.sharp(elem(0)).coords()) << "\n";
    } else if (expr == "cross") {
        std::cout << coords_str<S>(J.cross(elem(0), elem(1)).coords()) << "\n";
    } else if (expr == "bracket") {
        Matrix<S> m = J.bracket(elem(0), elem(1));
        for (int r = 0; r < kAlbertDim; ++r) std::cout << coords_str<S>(m.row(r)) << "\n";
    } else {
        throw ParseError("unknown eval expression '" + expr + "'");
    }
    return 0;
}

// eval on the Brown layer.  Plain contexts run over Q with the configured
// zeta; with --quad-d the element files carry quadratic scalars upstairs and
// the derived forms are computed in the descent algebra.
int eval_brown(const Config& cfg, const std::string& expr,
               const std::vector<std::string>& files) {
    if (cfg.quad_d == 0) {
        BrownCtx<Rat> ctx{AlbertCtx<Rat>(cfg.gamma_rat()), cfg.zeta_rat()};
        FtsAlgebra alg = FtsAlgebra::from_split(ctx);
        auto elem = [&](int i) { return load_coords<Rat>(files.at(i), kBrownDim, 0); };
        if (expr == "brownmul")
            std::cout << coords_str<Rat>(alg.mul(elem(0), elem(1))) << "\n";
        else if (expr == "ueval")
            std::cout << coords_str<Rat>(alg.u_apply(elem(0), elem(1))) << "\n";
        else if (expr == "b")
            std::cout << alg.b_via_psi(elem(0), elem(1)).str() << "\n";
        else if (expr == "t")
            std::cout << coords_str<Rat>(alg.t(elem(0), elem(1), elem(2))) << "\n";
        else if (expr == "q")
            std::cout << alg.q(elem(0), elem(1), elem(2), elem(3)).str() << "\n";
        else if (expr == "nu")
            std::cout << alg.nu(elem(0)).str() << "\n";
        else
            throw ParseError("unknown eval expression '" + expr + "'");
        return 0;
    }
    QuadDescent qd(cfg.quad_d, cfg.gamma_rat());
    FtsAlgebra alg = FtsAlgebra::from_descent(qd);
    auto upstairs = [&](int i) {
        return BrownElem<QuadExt>::from_coords(
            load_coords<QuadExt>(files.at(i), kBrownDim, cfg.quad_d));
    };
    auto elem = [&](int i) {
        try {
            return qd.to_coords(upstairs(i));
        } catch (const NotFixed&) {
            throw ParseError("element in '" + files.at(i) +
                             "' is not fixed by the descent involution");
        }
    };
    if (expr == "brownmul") {
        auto prod = qd.upstairs().mul(upstairs(0), upstairs(1));
        std::cout << coords_str<QuadExt>(prod.coords()) << "\n";
    } else if (expr == "ueval") {
        Vec img = alg.u_apply(elem(0), elem(1));
        std::cout << coords_str<QuadExt>(qd.from_coords(img).coords()) << "\n";
    } else if (expr == "b") {
        std::cout << alg.b_via_psi(elem(0), elem(1)).str() << "\n";
    } else if (expr == "t") {
        Vec img = alg.t(elem(0), elem(1), elem(2));
        std::cout << coords_str<QuadExt>(qd.from_coords(img).coords()) << "\n";
    } else if (expr == "q") {
        std::cout << alg.q(elem(0), elem(1), elem(2), elem(3)).str() << "\n";
    } else if (expr == "nu") {
        std::cout << alg.nu(elem(0)).str() << "\n";
    } else {
        throw ParseError("unknown eval expression '" + expr + "'");
    }
    return 0;
}

FtsAlgebra make_fts(const Config& cfg) {
    if (cfg.quad_d == 0)
        return FtsAlgebra::from_split(BrownCtx<Rat>{AlbertCtx<Rat>(cfg.gamma_rat()),
                                                    cfg.zeta_rat()});
    return FtsAlgebra::from_descent(QuadDescent(cfg.quad_d, cfg.gamma_rat()));
}

int run_ideal(const Config& cfg, const std::string& action,
              const std::vector<std::string>& files) {
    FtsAlgebra alg = make_fts(cfg);
    if (action == "check") {
        RatSubspace sub = load_subspace(files.at(0), kBrownDim);
        IdealReport rep = inspect_ideal(alg, sub);
        std::cout << "inner=" << (rep.is_inner ? "true" : "false")
                  << " singular=" << (rep.is_singular ? "true" : "false") << " dim=" << rep.dim
                  << "\n";
        if (!rep.is_inner && rep.witness)
            std::cout << "witness: " << coords_str<Rat>(*rep.witness) << "\n";
        return rep.is_inner ? 0 : 1;
    }
    if (action == "closure") {
        std::vector<Vec> gens;
        for (const std::string& f : files) gens.push_back(load_coords<Rat>(f, kBrownDim, 0));
        if (gens.empty()) throw ParseError("closure needs at least one element file");
        RatSubspace cl = inner_closure(alg, gens);
        write_subspace<Rat>(std::cout, cl);
        return 0;
    }
    if (action == "classify") {
        RatSubspace sub = load_subspace(files.at(0), kBrownDim);
        auto idx = classify_e7(alg, sub);
        if (idx)
            std::cout << "e7-space index=" << *idx << " dim=" << sub.dim() << "\n";
        else
            std::cout << "none\n";
        return idx ? 0 : 1;
    }
    throw ParseError("unknown ideal action '" + action + "'");
}

int run_classify(const Config& cfg, const std::string& geometry, const std::string& file) {
    if (geometry == "e6") {
        AlbertCtx<Rat> J(cfg.gamma_rat());
        RatSubspace sub = load_subspace(file, kAlbertDim);
        auto idx = classify_e6(J, sub);
        if (idx)
            std::cout << "e6-space index=" << *idx << " dim=" << sub.dim() << "\n";
        else
            std::cout << "none\n";
        return idx ? 0 : 1;
    }
    if (geometry == "e7") {
        FtsAlgebra alg = make_fts(cfg);
        RatSubspace sub = load_subspace(file, kBrownDim);
        auto idx = classify_e7(alg, sub);
        if (idx)
            std::cout << "e7-space index=" << *idx << " dim=" << sub.dim() << "\n";
        else
            std::cout << "none\n";
        return idx ? 0 : 1;
    }
    throw ParseError("--geometry must be e6 or e7");
}

int run_incidence(const Config& cfg, const std::string& geometry, const std::string& file_a,
                  const std::string& file_b) {
    AlbertCtx<Rat> J(cfg.gamma_rat());
    IncidenceRules rules =
        cfg.strict_paper ? IncidenceRules::strict_paper() : IncidenceRules::computed(J);
    Geometry geom;
    int ambient;
    if (geometry == "e6") {
        geom = Geometry::E6;
        ambient = kAlbertDim;
    } else if (geometry == "e7") {
        geom = Geometry::E7;
        ambient = kBrownDim;
    } else {
        throw ParseError("--geometry must be e6 or e7");
    }
    RatSubspace a = load_subspace(file_a, ambient);
    RatSubspace b = load_subspace(file_b, ambient);
    std::optional<int> ia, ib;
    if (geom == Geometry::E6) {
        ia = classify_e6(J, a);
        ib = classify_e6(J, b);
    } else {
        FtsAlgebra alg = make_fts(cfg);
        ia = classify_e7(alg, a);
        ib = classify_e7(alg, b);
    }
    if (!ia || !ib) {
        std::cout << "unclassified\n";
        return 1;
    }
    bool inc = incident(geom, {geom, *ia}, a, {geom, *ib}, b, rules);
    std::cout << "incident=" << (inc ? "true" : "false") << " types=" << *ia << "," << *ib
              << "\n";
    return inc ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact split Cayley / Albert / Brown algebra workbench"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Config cfg;
    app.add_option("--zeta", cfg.zeta, "structure scalar zeta (default 1)");
    app.add_option("--gamma", cfg.gamma, "diagonal gamma as g0,g1,g2 (default 1,1,1)");
    app.add_option("--quad-d", cfg.quad_d, "work over Q(sqrt d) / its descent algebra");
    app.add_option("--seed", cfg.seed, "seed for randomized suites (default 42)");
    app.add_flag("--strict-paper-incidence", cfg.strict_paper,
                 "use the written incidence thresholds for the disputed pairs");

    std::string expr, action, geometry, suite = "all";
    std::vector<std::string> files;

    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression on element files");
    eval->add_option("expr", expr,
                     "one of sharp|norm|cross|trace|bracket|brownmul|b|t|q|nu|ueval")
        ->required();
    eval->add_option("files", files, "element files")->required();

    CLI::App* ideal = app.add_subcommand("ideal", "inner/singular ideal queries");
    ideal->add_option("action", action, "check|closure|classify")->required();
    ideal->add_option("files", files, "subspace or element files")->required();

    CLI::App* classify = app.add_subcommand("classify-space", "classify a flag space");
    classify->add_option("--geometry", geometry, "e6|e7")->required();
    classify->add_option("files", files, "subspace file")->required();

    CLI::App* incid = app.add_subcommand("incidence", "incidence of two classified spaces");
    incid->add_option("--geometry", geometry, "e6|e7")->required();
    incid->add_option("files", files, "two subspace files")->required()->expected(2);

    CLI::App* dual = app.add_subcommand("dual", "duality map of a 27-dimensional subspace");
    dual->add_option("files", files, "subspace file")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", suite,
                       "all|cayley|albert|brown|fts|duality|ideals|flags (default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.check_quad();
        if (eval->parsed()) {
            bool albert_expr = expr == "sharp" || expr == "norm" || expr == "cross" ||
                               expr == "trace" || expr == "bracket";
            if (albert_expr) {
                if (cfg.quad_d == 0) return eval_albert<Rat>(cfg, expr, files);
                return eval_albert<QuadExt>(cfg, expr, files);
            }
            return eval_brown(cfg, expr, files);
        }
        if (ideal->parsed()) return run_ideal(cfg, action, files);
        if (classify->parsed()) return run_classify(cfg, geometry, files.at(0));
        if (incid->parsed()) return run_incidence(cfg, geometry, files.at(0), files.at(1));
        if (dual->parsed()) {
            AlbertCtx<Rat> J(cfg.gamma_rat());
            RatSubspace sub = load_subspace(files.at(0), kAlbertDim);
            write_subspace<Rat>(std::cout, J.duality_map(sub));
            return 0;
        }
        if (verify->parsed()) {
            auto results = run_suite(suite, cfg.seed);
            bool ok = print_report(std::cout, results);
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range&) {
        std::cerr << "error: missing input file argument\n";
        return 2;
    }
    return 2;
}
