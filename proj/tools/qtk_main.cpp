#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtk/characters.hpp"
#include "qtk/checks.hpp"
#include "qtk/csp.hpp"
#include "qtk/cyclotomic.hpp"
#include "qtk/errors.hpp"
#include "qtk/garsia_haiman.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/serialize.hpp"
#include "qtk/tableaux.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

struct Options {
    std::string format = "text";
    std::string cache_path;
};

bool json_output(const Options& opt) { return opt.format == "json"; }

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--cache", opt.cache_path,
                    "qt-Kostka table cache file (overrides QTK_CACHE)");
}

// Loads the cache (flag, else QTK_CACHE env) into the memo; returns the
// effective path, empty when caching is off.
std::string prime_cache(const Options& opt) {
    std::string path = opt.cache_path;
    if (path.empty()) {
        const char* env = std::getenv("QTK_CACHE");
        if (env) path = env;
    }
    if (path.empty()) return path;
    for (const qtk::QtKostkaTable& t : qtk::load_cache(path)) qtk::seed_qt_kostka(t);
    return path;
}

void flush_cache(const std::string& path) {
    if (path.empty()) return;
    qtk::save_cache(path, qtk::qt_kostka_cache_entries());
}

void emit(const Options& opt, const qtk::Json& json, const std::string& text) {
    if (json_output(opt))
        std::cout << json.dump(2) << "\n";
    else
        std::cout << text;
}

std::string table_text(const std::map<qtk::Partition, qtk::MultiPoly>& entries, int n) {
    std::string out;
    for (const qtk::Partition& lambda : qtk::partitions_of(n)) {
        auto it = entries.find(lambda);
        if (it == entries.end()) continue;
        out += lambda.to_string() + ": " + it->second.render() + "\n";
    }
    return out;
}

qtk::Json table_json_obj(const std::map<qtk::Partition, qtk::MultiPoly>& entries, int n) {
    qtk::Json obj = qtk::Json::object();
    for (const qtk::Partition& lambda : qtk::partitions_of(n)) {
        auto it = entries.find(lambda);
        if (it == entries.end()) continue;
        qtk::Json e = qtk::Json::object();
        e["poly"] = it->second.render();
        e["terms"] = qtk::poly_to_json(it->second);
        obj[lambda.to_string()] = e;
    }
    return obj;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (q,t)-Kostka tables, Hall-Littlewood data, and cyclic "
                 "sieving verification"};
    app.require_subcommand(1);
    int exit_code = 0;

    // partitions
    auto opt_partitions = std::make_shared<Options>();
    int partitions_n = 0;
    CLI::App* cmd_partitions = app.add_subcommand("partitions", "list partitions of n");
    cmd_partitions->add_option("n", partitions_n, "size")->required()
        ->check(CLI::NonNegativeNumber);
    add_common(cmd_partitions, *opt_partitions);
    cmd_partitions->callback([&, opt_partitions]() {
        std::vector<qtk::Partition> parts = qtk::partitions_of(partitions_n);
        qtk::Json arr = qtk::Json::array();
        std::string text;
        for (const qtk::Partition& p : parts) {
            arr.push_back(p.to_string());
            text += p.to_string() + "\n";
        }
        emit(*opt_partitions, arr, text);
    });

    // kostka
    auto opt_kostka = std::make_shared<Options>();
    std::string kostka_lambda, kostka_nu;
    CLI::App* cmd_kostka = app.add_subcommand("kostka", "Kostka number K(lambda,nu)");
    cmd_kostka->add_option("--lambda", kostka_lambda, "shape")->required();
    cmd_kostka->add_option("--nu", kostka_nu, "content")->required();
    add_common(cmd_kostka, *opt_kostka);
    cmd_kostka->callback([&, opt_kostka]() {
        std::int64_t k = qtk::kostka_number(qtk::Partition::parse(kostka_lambda),
                                            qtk::Composition::parse(kostka_nu));
        qtk::Json obj = qtk::Json::object();
        obj["lambda"] = kostka_lambda;
        obj["nu"] = kostka_nu;
        obj["value"] = k;
        emit(*opt_kostka, obj, std::to_string(k) + "\n");
    });

    // fake-degree
    auto opt_fd = std::make_shared<Options>();
    std::string fd_lambda;
    CLI::App* cmd_fd = app.add_subcommand("fake-degree",
                                          "major-index generating function f^lambda(z)");
    cmd_fd->add_option("--lambda", fd_lambda, "shape")->required();
    add_common(cmd_fd, *opt_fd);
    cmd_fd->callback([&, opt_fd]() {
        qtk::MultiPoly f = qtk::fake_degree(qtk::Partition::parse(fd_lambda));
        qtk::Json obj = qtk::Json::object();
        obj["lambda"] = fd_lambda;
        obj["poly"] = f.render();
        obj["terms"] = qtk::poly_to_json(f);
        emit(*opt_fd, obj, f.render() + "\n");
    });

    // cocharge-kostka
    auto opt_cc = std::make_shared<Options>();
    std::string cc_lambda, cc_nu;
    CLI::App* cmd_cc = app.add_subcommand("cocharge-kostka",
                                          "cocharge generating function in z");
    cmd_cc->add_option("--lambda", cc_lambda, "shape")->required();
    cmd_cc->add_option("--nu", cc_nu, "content")->required();
    add_common(cmd_cc, *opt_cc);
    cmd_cc->callback([&, opt_cc]() {
        qtk::MultiPoly f = qtk::cocharge_kostka(qtk::Partition::parse(cc_lambda),
                                                qtk::Composition::parse(cc_nu));
        qtk::Json obj = qtk::Json::object();
        obj["lambda"] = cc_lambda;
        obj["nu"] = cc_nu;
        obj["poly"] = f.render();
        obj["terms"] = qtk::poly_to_json(f);
        emit(*opt_cc, obj, f.render() + "\n");
    });

    // qt-kostka
    auto opt_qt = std::make_shared<Options>();
    std::string qt_mu;
    CLI::App* cmd_qt = app.add_subcommand("qt-kostka", "qt-Kostka table of mu");
    cmd_qt->add_option("--mu", qt_mu, "partition")->required();
    add_common(cmd_qt, *opt_qt);
    cmd_qt->callback([&, opt_qt]() {
        std::string cache = prime_cache(*opt_qt);
        qtk::Partition mu = qtk::Partition::parse(qt_mu);
        const qtk::QtKostkaTable& table = qtk::qt_kostka(mu);
        qtk::Json obj = qtk::Json::object();
        obj["mu"] = mu.to_string();
        obj["entries"] = table_json_obj(table.entries, mu.size());
        emit(*opt_qt, obj, table_text(table.entries, mu.size()));
        flush_cache(cache);
    });

    // hl-kostka
    auto opt_hl = std::make_shared<Options>();
    std::string hl_nu;
    CLI::App* cmd_hl = app.add_subcommand("hl-kostka",
                                          "Hall-Littlewood z-Kostka table of nu");
    cmd_hl->add_option("--nu", hl_nu, "composition")->required();
    add_common(cmd_hl, *opt_hl);
    cmd_hl->callback([&, opt_hl]() {
        std::string cache = prime_cache(*opt_hl);
        qtk::Composition nu = qtk::Composition::parse(hl_nu);
        std::map<qtk::Partition, qtk::MultiPoly> table = qtk::hl_kostka(nu);
        qtk::Json obj = qtk::Json::object();
        obj["nu"] = nu.to_string();
        obj["entries"] = table_json_obj(table, nu.size());
        emit(*opt_hl, obj, table_text(table, nu.size()));
        flush_cache(cache);
    });

    // csp-poly / csp-verify share parameter plumbing
    struct CspArgs {
        std::string kind;
        int m = 1, n = 1, a = 1, b = 1;
        std::string nu;
        int bound = 8;
        bool reduced = false;
    };
    auto parse_params = [](const CspArgs& args) {
        qtk::CspParams p;
        p.m = args.m;
        p.n = args.n;
        p.a = args.a;
        p.b = args.b;
        if (!args.nu.empty()) p.nu = qtk::Composition::parse(args.nu);
        return p;
    };

    auto opt_poly = std::make_shared<Options>();
    auto poly_args = std::make_shared<CspArgs>();
    CLI::App* cmd_poly = app.add_subcommand("csp-poly", "assemble a theorem polynomial");
    cmd_poly->add_option("--kind", poly_args->kind, "rect3|content2|content3|perm4")
        ->required();
    cmd_poly->add_option("-m", poly_args->m, "columns");
    cmd_poly->add_option("-n", poly_args->n, "rows");
    cmd_poly->add_option("-a", poly_args->a, "translation step / column block size");
    cmd_poly->add_option("-b", poly_args->b, "number of column blocks");
    cmd_poly->add_option("--nu", poly_args->nu, "content composition");
    cmd_poly->add_flag("--reduced", poly_args->reduced,
                       "reduce exponents modulo the group orders");
    add_common(cmd_poly, *opt_poly);
    cmd_poly->callback([&, opt_poly, poly_args]() {
        std::string cache = prime_cache(*opt_poly);
        qtk::CspKind kind = qtk::kind_from_name(poly_args->kind);
        qtk::CspParams params = parse_params(*poly_args);
        qtk::MultiPoly x = qtk::csp_polynomial(kind, params);
        if (poly_args->reduced) {
            std::map<qtk::Var, int> orders{{qtk::Var::q, params.n},
                                           {qtk::Var::t, params.m}};
            if (kind == qtk::CspKind::rect3)
                orders.emplace(qtk::Var::z, params.m * params.n);
            if (kind == qtk::CspKind::content3)
                orders.emplace(qtk::Var::z, params.nu.length() / params.a);
            if (kind == qtk::CspKind::perm4) {
                orders.emplace(qtk::Var::z, params.b);
                orders.emplace(qtk::Var::w, params.a);
            }
            x = qtk::reduce_exponents(x, orders);
        }
        qtk::Json obj = qtk::Json::object();
        obj["kind"] = poly_args->kind;
        obj["poly"] = x.render();
        obj["terms"] = qtk::poly_to_json(x);
        emit(*opt_poly, obj, x.render() + "\n");
        flush_cache(cache);
    });

    auto opt_verify = std::make_shared<Options>();
    auto verify_args = std::make_shared<CspArgs>();
    CLI::App* cmd_verify = app.add_subcommand("csp-verify",
                                              "brute-force sieving verification");
    cmd_verify->add_option("--kind", verify_args->kind, "rect3|content2|content3|perm4")
        ->required();
    cmd_verify->add_option("-m", verify_args->m, "columns");
    cmd_verify->add_option("-n", verify_args->n, "rows");
    cmd_verify->add_option("-a", verify_args->a, "translation step / column block size");
    cmd_verify->add_option("-b", verify_args->b, "number of column blocks");
    cmd_verify->add_option("--nu", verify_args->nu, "content composition");
    cmd_verify->add_option("--bound", verify_args->bound, "carrier size bound")
        ->capture_default_str();
    add_common(cmd_verify, *opt_verify);
    cmd_verify->callback([&, opt_verify, verify_args]() {
        std::string cache = prime_cache(*opt_verify);
        qtk::CspKind kind = qtk::kind_from_name(verify_args->kind);
        qtk::CspReport rep =
            qtk::verify_csp(kind, parse_params(*verify_args), verify_args->bound);
        emit(*opt_verify, qtk::report_to_json(rep), rep.render_text());
        flush_cache(cache);
        if (!rep.all_match) exit_code = kExitMismatch;
    });

    // gh-hilbert
    auto opt_gh = std::make_shared<Options>();
    std::string gh_mu;
    bool gh_allow5 = false, gh_cross = false;
    CLI::App* cmd_gh = app.add_subcommand("gh-hilbert",
                                          "bigraded Hilbert series of the derivative span");
    cmd_gh->add_option("--mu", gh_mu, "partition")->required();
    cmd_gh->add_flag("--allow-n5", gh_allow5, "raise the size bound to five cells");
    cmd_gh->add_flag("--crosscheck", gh_cross,
                     "compare against the qt-Kostka table sum");
    add_common(cmd_gh, *opt_gh);
    cmd_gh->callback([&, opt_gh]() {
        std::string cache = prime_cache(*opt_gh);
        qtk::Partition mu = qtk::Partition::parse(gh_mu);
        int bound = gh_allow5 ? 5 : 4;
        if (gh_allow5 && mu.size() == 5)
            std::cerr << "warning: five-cell derivative spans are slow\n";
        qtk::BigradedHilbert h = qtk::gh_hilbert(mu, bound);
        qtk::Json obj = qtk::hilbert_to_json(h);
        obj["mu"] = mu.to_string();
        std::string text;
        for (const auto& [de, dim] : h.dims)
            text += "(" + std::to_string(de.first) + "," + std::to_string(de.second) +
                    "): " + std::to_string(dim) + "\n";
        text += "total: " + std::to_string(h.total()) + "\n";
        if (gh_cross) {
            qtk::GhCrosscheck rec = qtk::gh_crosscheck(mu, bound);
            obj["crosscheck"] = qtk::orientation_name(rec.matched);
            obj["kostka_sum"] = rec.macdonald_sum.render();
            text += std::string("crosscheck: ") + qtk::orientation_name(rec.matched) +
                    "\nkostka_sum: " + rec.macdonald_sum.render() + "\n";
        }
        emit(*opt_gh, obj, text);
        flush_cache(cache);
    });

    // selftest
    auto opt_self = std::make_shared<Options>();
    int self_n = 5, self_cells = 5, self_gh = 4, self_trials = 40;
    CLI::App* cmd_self = app.add_subcommand("selftest", "run the invariant suites");
    cmd_self->add_option("--max-n", self_n, "partition size bound")
        ->capture_default_str();
    cmd_self->add_option("--max-cells", self_cells, "carrier size bound for sweeps")
        ->capture_default_str();
    cmd_self->add_option("--max-gh", self_gh, "derivative span size bound")
        ->capture_default_str();
    cmd_self->add_option("--trials", self_trials, "randomized trials")
        ->capture_default_str();
    add_common(cmd_self, *opt_self);
    cmd_self->callback([&, opt_self]() {
        std::string cache = prime_cache(*opt_self);
        std::vector<qtk::CheckResult> all;
        auto run = [&all](std::vector<qtk::CheckResult> rs) {
            for (qtk::CheckResult& r : rs) all.push_back(std::move(r));
        };
        run(qtk::run_combinatorics_checks(self_n));
        run(qtk::run_polyring_checks(60, self_trials, 20240817u));
        run(qtk::run_macdonald_checks(self_n));
        run(qtk::run_springer_checks(self_n));
        run(qtk::run_kronecker_checks(std::min(self_n, 5)));
        run(qtk::run_csp_structure_checks(self_cells));
        run(qtk::run_theorem_checks(self_cells));
        run(qtk::run_gh_checks(self_gh));
        qtk::Json arr = qtk::Json::array();
        std::string text;
        bool ok = true;
        for (const qtk::CheckResult& r : all) {
            ok = ok && r.pass;
            qtk::Json obj = qtk::Json::object();
            obj["name"] = r.name;
            obj["pass"] = r.pass;
            if (!r.pass) obj["detail"] = r.detail;
            arr.push_back(obj);
            text += std::string(r.pass ? "ok   " : "FAIL ") + r.name +
                    (r.pass ? "" : "  [" + r.detail + "]") + "\n";
        }
        text += std::string("selftest: ") + (ok ? "all checks passed" : "FAILURES") + "\n";
        emit(*opt_self, arr, text);
        flush_cache(cache);
        if (!ok) exit_code = kExitMismatch;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    } catch (const qtk::InvalidSymmetry& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qtk::SizeBound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
