// Command-line front end: parse surface configurations, run identity, metric
// and bound computations, and emit CSV or JSON reports with exit codes
// suitable for scripted regression (0 pass, 1 failed tolerance, 2 bad usage).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypsurf/arcmetric.hpp"
#include "hypsurf/holonomy.hpp"
#include "hypsurf/identities.hpp"
#include "hypsurf/io.hpp"
#include "hypsurf/starcheck.hpp"

namespace {

using namespace hypsurf;
namespace ho = hypsurf::holonomy;
namespace id = hypsurf::identities;
namespace am = hypsurf::arcmetric;
namespace sc = hypsurf::starcheck;
namespace hp = hypsurf::halfplane;

constexpr int exit_ok = 0;
constexpr int exit_assert = 1;
constexpr int exit_usage = 2;

struct Output {
    std::string path;
    io::Format format = io::Format::Csv;

    template <typename F>
    void with_stream(F&& f) const {
        if (path.empty()) {
            f(std::cout);
        } else {
            std::ofstream os(path);
            if (!os)
                throw ConfigError("cannot open output file: " + path);
            f(os);
        }
    }
};

std::vector<double> parse_numbers(const std::string& csv, std::size_t expected) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse number list: " + csv);
        }
    }
    if (expected != 0 && out.size() != expected)
        throw ConfigError("expected " + std::to_string(expected) + " numbers in: " + csv);
    return out;
}

ho::SurfaceGroup surface_from(const std::string& pants_csv, const std::string& config) {
    // Inline parameters take precedence over a config file.
    if (!pants_csv.empty()) {
        if (!config.empty())
            std::cerr << "note: --pants overrides --config\n";
        const auto l = parse_numbers(pants_csv, 3);
        return ho::build_pants(Length(l[0]), Length(l[1]), Length(l[2]));
    }
    if (!config.empty())
        return ho::build_chain(io::load_fn(config));
    throw ConfigError("need --pants l1,l2,l3 or --config file.json");
}

void note_threads() {
    // Computations are deterministic and run serially; the variable is
    // accepted for forward compatibility and validated if present.
    if (const char* env = std::getenv("HYPSURF_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1)
            throw ConfigError("HYPSURF_THREADS must be a positive integer");
    }
}

int run_basmajian(const std::string& pants, const std::string& config,
                  const std::string& boundary, int max_word_length, double tol,
                  const Output& out) {
    const auto g = surface_from(pants, config);
    const auto rep = id::basmajian_report(g, boundary, max_word_length);
    out.with_stream([&](std::ostream& os) {
        io::write_identity_report(os, out.format, rep, tol);
    });
    // Nondecreasing and bounded; terms far below the running sum's resolution
    // legitimately leave the float partial sum unchanged.
    bool monotone_bounded = true;
    double prev = 0.0;
    for (double s : rep.partial_sums) {
        if (s < prev || s > rep.target + 1e-9)
            monotone_bounded = false;
        prev = s;
    }
    std::cerr << "basmajian: target " << io::format_double(rep.target) << ", residual "
              << io::format_double(rep.residual) << " after " << rep.terms_used
              << " terms (bound " << max_word_length << ")\n";
    return monotone_bounded && rep.residual <= tol ? exit_ok : exit_assert;
}

int run_mcshane(const std::string& traces, const std::string& cuff_spec, double twist,
                double length_cap, double tol, const Output& out) {
    ho::SurfaceGroup g = [&]() {
        if (!traces.empty() && !cuff_spec.empty())
            throw ConfigError("give either --traces or --cuff");
        if (!traces.empty()) {
            const auto t = parse_numbers(traces, 3);
            return ho::build_torus_from_traces(t[0], t[1], t[2]);
        }
        if (!cuff_spec.empty())
            return ho::build_one_holed_torus(Length(std::stod(cuff_spec)), twist);
        throw ConfigError("need --traces x,y,z or --cuff length");
    }();
    const auto rep = id::mcshane_torus_report(g, Length(length_cap));
    out.with_stream([&](std::ostream& os) {
        io::write_identity_report(os, out.format, rep, tol);
    });
    std::cerr << "mcshane-torus: target " << io::format_double(rep.target) << ", residual "
              << io::format_double(rep.residual) << " over " << rep.terms_used
              << " curves (cap " << io::format_double(length_cap) << ")\n";
    return rep.residual >= -1e-9 && rep.residual <= tol ? exit_ok : exit_assert;
}

int run_spectrum(const std::string& pants, const std::string& config,
                 const std::string& boundary, int max_word_length, const Output& out) {
    const auto g = surface_from(pants, config);
    const auto terms = id::ortho_spectrum(g, boundary, max_word_length);
    out.with_stream([&](std::ostream& os) {
        io::write_spectrum(os, out.format, terms, g, max_word_length);
    });
    return exit_ok;
}

int run_arc_metric(const std::string& config_x, const std::string& config_y, int depth,
                   int twist_max, const Output& out) {
    const auto fnx = io::load_fn(config_x);
    const auto fny = io::load_fn(config_y);
    const auto X = ho::build_chain(fnx);
    const auto Y = ho::build_chain(fny);
    const auto family = am::generate_family(fnx, depth, twist_max);
    const auto xy = am::sup_log_ratio(X, Y, family);
    const auto yx = am::sup_log_ratio(Y, X, family);
    const auto split = am::boundary_vs_interior_sup(X, Y, family);
    out.with_stream([&](std::ostream& os) {
        io::write_ratio_report(os, out.format, xy);
    });
    std::cerr << "arc-metric: sup log-ratio X->Y " << io::format_double(xy.sup_log_ratio)
              << " (witness " << xy.witness.label << "), Y->X "
              << io::format_double(yx.sup_log_ratio) << " (witness " << yx.witness.label
              << ")\n"
              << "arc-metric: arcs+boundaries sup " << io::format_double(split.sup_arcs_boundaries)
              << ", arcs+closed sup " << io::format_double(split.sup_arcs_closed) << '\n';
    return exit_ok;
}

int run_tight_pants(double l1, double l2, double tol) {
    const auto r = id::tight_pants_check(Length(l1), Length(l2));
    std::cout << "measured distance " << io::format_double(r.lhs) << "\n"
              << "constant sum      " << io::format_double(r.rhs) << "\n"
              << "gap               " << io::format_double(r.gap) << "\n";
    return r.gap <= tol ? exit_ok : exit_assert;
}

int run_example52(double l0, int N, const std::string& sequence, const Output& out) {
    std::vector<double> ls;
    for (int n = 1; n <= N; ++n)
        ls.push_back(sequence == "log" ? std::log(n + 2.0) : n + 1.0);
    const auto rep = sc::lemma52_bounds(Length(l0), ls, N);
    out.with_stream([&](std::ostream& os) { io::write_bound_report(os, out.format, rep); });
    std::cerr << "example52: sup " << io::format_double(rep.sup) << ", certified bound "
              << io::format_double(rep.claimed_bound) << '\n';
    return rep.pass ? exit_ok : exit_assert;
}

int run_example53(int N) {
    const auto ls = sc::dyadic_flute_lengths(N);
    const auto rep = sc::tight_flute_check(ls, N);
    const double tail = 3.0 * std::pow(2.0, -N);
    const double want = std::log(2.0) + 2.0;
    const double total_err = std::abs(rep.total + tail - want);
    const double cond30 = sc::dyadic_condition_value(ls[std::min(N, 30) - 1]);
    const double cond40 = sc::dyadic_condition_value(40.0);
    const double hex20 = hyptrig::coth_fourth_excess(20.0);
    std::cout << "sum of gaps + tail   " << io::format_double(rep.total + tail)
              << "  (log 2 + 2 = " << io::format_double(want) << ", error "
              << io::format_double(total_err) << ")\n"
              << "condition value n=" << std::min(N, 30) << "  "
              << io::format_double(cond30) << "  (limit 8)\n"
              << "condition value x=40 " << io::format_double(cond40) << "  (limit 8)\n"
              << "hexagon tail x=20    " << io::format_double(hex20) << "  (limit 2)\n";
    const bool ok = total_err <= 1e-12 && std::abs(cond40 - 8.0) <= 1e-6 &&
                    std::abs(hex20 - 2.0) <= 1e-6;
    return ok ? exit_ok : exit_assert;
}

int run_example55(double l0, int N, const Output& out) {
    std::vector<double> alpha(N + 1, l0), beta;
    for (int n = 0; n < N; ++n)
        beta.push_back(1.0 + 0.5 * n);
    const auto rep = sc::prop54_bounds(alpha, beta, N);
    out.with_stream([&](std::ostream& os) { io::write_bound_report(os, out.format, rep); });
    bool envelope = true;
    for (int n = 0; n < N; ++n)
        if (std::cosh(rep.rows[n][0]) > 2.0 / std::tanh(beta[n]) / std::tanh(l0) + 1e-12)
            envelope = false;
    std::cerr << "example55: sup " << io::format_double(rep.sup) << ", gap partial sum "
              << io::format_double(rep.rows.back()[5]) << '\n';
    return rep.pass && envelope ? exit_ok : exit_assert;
}

int run_example56(int N, const Output& out) {
    const auto rows = sc::collar_decorated_profile(1, N);
    out.with_stream([&](std::ostream& os) {
        if (out.format == io::Format::Csv) {
            os << "n,core,collar,equidistant,closed_form\n";
            for (const auto& r : rows)
                os << r.n << ',' << io::format_double(r.core) << ','
                   << io::format_double(r.collar) << ',' << io::format_double(r.equidistant)
                   << ',' << io::format_double(r.closed_form) << '\n';
        } else {
            nlohmann::json jrows = nlohmann::json::array();
            for (const auto& r : rows)
                jrows.push_back({{"n", r.n},
                                 {"core", r.core},
                                 {"collar", r.collar},
                                 {"equidistant", r.equidistant},
                                 {"closed_form", r.closed_form}});
            os << nlohmann::json{{"metadata", io::metadata(N, 0.0)}, {"rows", jrows}}.dump(2)
               << '\n';
        }
    });
    bool match = true;
    for (const auto& r : rows)
        if (std::abs(r.equidistant - r.closed_form) > 1e-12 * std::max(1.0, r.closed_form))
            match = false;
    const bool near2 = N < 1000 || std::abs(rows.back().equidistant - 2.0) <= 1e-3;
    std::cerr << "example56: last boundary length " << io::format_double(rows.back().equidistant)
              << " (limit 2)\n";
    return match && near2 ? exit_ok : exit_assert;
}

int run_example57(int n_lo, int n_hi) {
    const auto rep = sc::polygon_example_check(n_lo, n_hi);
    std::cout << "n range " << n_lo << ".." << n_hi << "\n"
              << "cosh a_n = 2 throughout: " << (rep.cosh_a_constant ? "yes" : "no") << "\n"
              << "beta_n < alpha_n:        " << (rep.beta_below_alpha ? "yes" : "no") << "\n"
              << "sinh L_n < 2:            " << (rep.legs_bounded ? "yes" : "no") << "\n"
              << "beta_n increasing:       " << (rep.beta_increasing ? "yes" : "no") << "\n"
              << "distance constant        " << io::format_double(rep.global_constant)
              << "  (= 2 arcsinh 2)\n";
    return rep.pass ? exit_ok : exit_assert;
}

int run_shiga(int N) {
    struct Row {
        const char* name;
        sc::ShigaResult result;
        bool expect_bounded;
    };
    std::vector<double> ones(N, 1.0), grow, shrink;
    for (int n = 0; n < N; ++n)
        grow.push_back(1.0 + 0.5 * n);
    for (int n = 1; n <= N; ++n)
        shrink.push_back(1.0 / (2.0 * n));
    const Row rows[] = {
        {"unit-cuff flute", sc::shiga_check(sc::FamilyRule::Constant, ones), true},
        {"widening flute", sc::shiga_check(sc::FamilyRule::IncreasingUnbounded, grow), false},
        {"pinched collars", sc::shiga_check(sc::FamilyRule::DecreasingToZero, shrink), false},
    };
    bool ok = true;
    std::cout << "family,min,max,bounded\n";
    for (const auto& r : rows) {
        std::cout << r.name << ',' << io::format_double(r.result.min) << ','
                  << io::format_double(r.result.max) << ','
                  << (r.result.bounded ? "yes" : "no") << '\n';
        ok = ok && r.result.bounded == r.expect_bounded;
    }
    return ok ? exit_ok : exit_assert;
}

int run_asymmetry(double alpha1_x, double alpha1_y, int depth, int twist_max, double gap_min,
                  const Output& out) {
    const double l = 2.0 * std::asinh(1.0); // sinh(l/2) = 1
    auto make = [&](double a1) {
        ho::FNSurface fn;
        fn.pants.push_back({{l, l, a1}});
        fn.pants.push_back({{a1, l, l}});
        fn.gluings.push_back({0, 2, 1, 0, 0.0});
        fn.boundaries = {{0, 0, "beta1"}, {0, 1, "beta2"}, {1, 1, "beta3"}, {1, 2, "beta4"}};
        return fn;
    };
    const auto fnx = make(alpha1_x), fny = make(alpha1_y);
    const auto X = ho::build_chain(fnx), Y = ho::build_chain(fny);

    // Pentagon/hexagon relations measured from holonomy.
    const auto g1 = hp::axes_distance(X.boundary("beta1").m, X.boundary("beta2").m);
    const double rel1 = std::abs(std::cosh(g1.distance.v) - (std::cosh(0.5 * alpha1_x) + 2.0));
    const hp::Word a2w =
        hp::reduced_concat(X.boundary("beta2").word, X.boundary("beta3").word);
    const double alpha2 = ho::curve_length(X, a2w).value.v;
    const auto g2 = hp::axes_distance(X.boundary("beta2").m, X.boundary("beta3").m);
    const double rel2 = std::abs(std::cosh(0.25 * alpha2) - std::sinh(0.5 * g2.distance.v));

    const auto family = am::generate_family(fnx, depth, twist_max);
    const auto xy = am::sup_log_ratio(X, Y, family);
    const auto yx = am::sup_log_ratio(Y, X, family);
    const double gap = std::abs(xy.sup_log_ratio - yx.sup_log_ratio);
    out.with_stream([&](std::ostream& os) { io::write_ratio_report(os, out.format, xy); });
    std::cerr << "thurston-asymmetry: |cosh gamma1 - (cosh(alpha1/2)+2)| = "
              << io::format_double(rel1) << '\n'
              << "thurston-asymmetry: |cosh(alpha2/4) - sinh(gamma2/2)| = "
              << io::format_double(rel2) << '\n'
              << "thurston-asymmetry: sup X->Y " << io::format_double(xy.sup_log_ratio)
              << " (witness " << xy.witness.label << "), sup Y->X "
              << io::format_double(yx.sup_log_ratio) << " (witness " << yx.witness.label
              << "), gap " << io::format_double(gap) << '\n';
    return rel1 <= 1e-6 && rel2 <= 1e-6 && gap > gap_min ? exit_ok : exit_assert;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for hyperbolic surfaces built from Fenchel-Nielsen data"};
    app.require_subcommand(1);

    Output out;
    std::string format_name = "csv";
    app.add_option("--output", out.path, "write the report to a file instead of stdout");
    app.add_option("--format", format_name, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string pants, config, boundary = "1", traces, cuff;
    int max_word_length = 8;
    double tol = 1e-9, twist = 0.0, length_cap = 20.0;
    int depth = 3, twist_max = 4;

    auto* basm = app.add_subcommand("basmajian", "boundary-length identity from the orthospectrum");
    basm->add_option("--pants", pants, "pants cuff lengths l1,l2,l3 (0 = cusp)");
    basm->add_option("--config", config, "FNSurface JSON file");
    basm->add_option("--boundary", boundary, "source boundary label (default 1)");
    basm->add_option("--max-word-length", max_word_length, "word-length truncation (default 8)");
    basm->add_option("--tol", tol, "residual tolerance (default 1e-9)");

    auto* mcsh = app.add_subcommand("mcshane-torus", "interval identity on the one-holed torus");
    mcsh->add_option("--traces", traces, "marking traces x,y,z");
    mcsh->add_option("--cuff", cuff, "FN cuff length");
    mcsh->add_option("--twist", twist, "FN twist (default 0)");
    mcsh->add_option("--length-cap", length_cap, "curve length cap (default 20)");
    mcsh->add_option("--tol", tol, "residual tolerance (default 1e-9)");

    auto* spect = app.add_subcommand("spectrum", "orthogeodesic spectrum CSV");
    spect->add_option("--pants", pants, "pants cuff lengths l1,l2,l3");
    spect->add_option("--config", config, "FNSurface JSON file");
    spect->add_option("--boundary", boundary, "source boundary label (default 1)");
    spect->add_option("--max-word-length", max_word_length, "word-length truncation (default 8)");

    std::string config_y;
    auto* arcm = app.add_subcommand("arc-metric", "family-restricted length-ratio estimates");
    arcm->add_option("--config", config, "FNSurface JSON for X")->required();
    arcm->add_option("--config-y", config_y, "FNSurface JSON for Y (same combinatorics)")
        ->required();
    arcm->add_option("--family-depth", depth, "arc coset word-length depth (default 3)");
    arcm->add_option("--twist-max", twist_max, "twisted transversal count (default 4)");

    double l1 = 2.0, l2 = 2.0;
    auto* tight = app.add_subcommand("tight-pants", "distance law for one-cusp pants");
    tight->add_option("--l1", l1, "first cuff length (default 2)");
    tight->add_option("--l2", l2, "second cuff length (default 2)");
    tight->add_option("--tol", tol, "gap tolerance (default 1e-9)");

    double l0 = 1.0;
    int window = 200;
    std::string sequence = "linear";
    auto* ex52 = app.add_subcommand("example52", "hexagon vertex bounds on a widening chain");
    ex52->add_option("--l0", l0, "short side (default 1)");
    ex52->add_option("--n", window, "window size (default 200)");
    ex52->add_option("--sequence", sequence, "long-side growth: linear or log")
        ->check(CLI::IsMember({"linear", "log"}));

    int n53 = 30;
    auto* ex53 = app.add_subcommand("example53", "dyadic tight flute totals and limits");
    ex53->add_option("--n", n53, "window size (default 30)");

    double l0_55 = 0.5;
    int n55 = 40;
    auto* ex55 = app.add_subcommand("example55", "flute with constant cuffs, widening boundaries");
    ex55->add_option("--l0", l0_55, "constant cuff half-length (default 0.5)");
    ex55->add_option("--n", n55, "window size (default 40)");

    int n56 = 1000;
    auto* ex56 = app.add_subcommand("example56", "collar boundary lengths around pinched curves");
    ex56->add_option("--n", n56, "window size (default 1000)");

    int n_lo = 3, n_hi = 100;
    auto* ex57 = app.add_subcommand("example57", "right-angled polygon tile relations");
    ex57->add_option("--n-min", n_lo, "smallest polygon parameter (default 3)");
    ex57->add_option("--n-max", n_hi, "largest polygon parameter (default 100)");

    int nsh = 64;
    auto* shig = app.add_subcommand("shiga", "bounded pants decomposition test families");
    shig->add_option("--n", nsh, "window size (default 64)");

    double a1x = 0.8, a1y = 0.2, gap_min = 0.1;
    auto* asym = app.add_subcommand("thurston-asymmetry",
                                    "asymmetry of the length-ratio metric on an X-piece pair");
    asym->add_option("--alpha1-x", a1x, "waist length on X (default 0.8)");
    asym->add_option("--alpha1-y", a1y, "contracted waist length on Y (default 0.2)");
    asym->add_option("--family-depth", depth, "arc coset depth (default 3)");
    asym->add_option("--twist-max", twist_max, "twisted transversal count (default 4)");
    asym->add_option("--gap-min", gap_min, "required asymmetry gap (default 0.1)");

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        note_threads();
        out.format = format_name == "json" ? io::Format::Json : io::Format::Csv;
        if (basm->parsed())
            return run_basmajian(pants, config, boundary, max_word_length, tol, out);
        if (mcsh->parsed())
            return run_mcshane(traces, cuff, twist, length_cap, tol, out);
        if (spect->parsed())
            return run_spectrum(pants, config, boundary, max_word_length, out);
        if (arcm->parsed())
            return run_arc_metric(config, config_y, depth, twist_max, out);
        if (tight->parsed())
            return run_tight_pants(l1, l2, tol);
        if (ex52->parsed())
            return run_example52(l0, window, sequence, out);
        if (ex53->parsed())
            return run_example53(n53);
        if (ex55->parsed())
            return run_example55(l0_55, n55, out);
        if (ex56->parsed())
            return run_example56(n56, out);
        if (ex57->parsed())
            return run_example57(n_lo, n_hi);
        if (shig->parsed())
            return run_shiga(nsh);
        if (asym->parsed())
            return run_asymmetry(a1x, a1y, depth, twist_max, gap_min, out);
    } catch (const hypsurf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
