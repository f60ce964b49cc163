#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rplie/io.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

uint64_t default_seed() {
    if (const char* env = std::getenv("RPLIE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

struct Options {
    std::string mode = "rational";
    double eps = 1e-9;
    bool json = false;
    bool human = false;

    void apply() const {
        rplie::set_session(mode == "float" ? rplie::ScalarKind::Float
                                           : rplie::ScalarKind::Rational,
                           eps);
    }
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

int run_check(const Options& opt, const std::string& path) {
    auto doc = rplie::io::parse(read_file(path));
    auto g = rplie::io::document_algebra(doc);
    auto rho = rplie::io::document_metric(doc);
    auto r = rplie::io::document_bivector(doc);
    auto rep = rplie::is_riemann_poisson(g, r, rho);
    if (opt.json) {
        std::cout << rplie::io::emit_rp_report(rep);
    } else {
        std::cout << "riemann-poisson: " << bool_str(rep.verdict) << "\n";
        std::cout << "  direct: " << bool_str(rep.direct.ok) << "\n";
        std::cout << "  c1/c2/c3: " << bool_str(rep.kernel_conditions.c1) << "/"
                  << bool_str(rep.kernel_conditions.c2) << "/"
                  << bool_str(rep.kernel_conditions.c3) << "\n";
        if (rep.kahler_characterization.applicable)
            std::cout << "  kahler/perp/omega-skew: "
                      << bool_str(rep.kahler_characterization.kahler_sub) << "/"
                      << bool_str(rep.kahler_characterization.perp_skew) << "/"
                      << bool_str(rep.kahler_characterization.s_perp_sp) << "\n";
        else
            std::cout << "  subalgebra characterization: not applicable ([r,r] != 0)\n";
        if (rep.biinvariant)
            std::cout << "  bi-invariant shortcut: " << bool_str(*rep.biinvariant) << "\n";
        std::cout << "  rank of r: " << rep.rank << "\n";
        if (!rep.verdict && rep.witness) {
            std::cout << "  failed: " << rep.witness->condition;
            for (const auto& [k, v] : rep.witness->fields) std::cout << " " << k << "=" << v;
            std::cout << "\n";
        }
    }
    if (rep.inconclusive) {
        std::cerr << "inconclusive: float-mode characterizations disagree\n";
        return kExitInternal;
    }
    return rep.verdict ? kExitTrue : kExitFalse;
}

int run_decompose(const Options& opt, const std::string& path) {
    auto doc = rplie::io::parse(read_file(path));
    auto g = rplie::io::document_algebra(doc);
    auto rho = rplie::io::document_metric(doc);
    auto r = rplie::io::document_bivector(doc);
    auto d = rplie::decompose(g, r, rho);
    if (opt.json) {
        std::cout << rplie::io::emit_decomposition(d);
    } else {
        std::cout << "dim = " << d.dim << ", rank = " << d.rank() << "\n";
        auto print = [](const char* name, const rplie::Mat& m) {
            std::cout << name << " (" << m.rows() << " x " << m.cols() << "):\n";
            for (int i = 0; i < m.rows(); ++i) {
                std::cout << "  ";
                for (int j = 0; j < m.cols(); ++j) std::cout << m.at(i, j).str() << " ";
                std::cout << "\n";
            }
        };
        print("kernel basis", d.kernel_basis);
        print("kernel orthocomplement", d.kernel_perp_basis);
        print("image basis", d.image_basis);
        print("image orthocomplement", d.image_perp_basis);
        print("omega on image", d.omega);
        print("J on image", d.j_operator);
    }
    return kExitTrue;
}

int run_levi_civita(const Options& opt, const std::string& path) {
    auto doc = rplie::io::parse(read_file(path));
    auto g = rplie::io::document_algebra(doc);
    auto rho = rplie::io::document_metric(doc);
    auto a = rplie::levi_civita(g, rho);
    if (opt.json) {
        std::cout << rplie::io::emit_levi_civita(g, rho, a);
    } else {
        for (int i = 0; i < g.dim(); ++i) {
            std::cout << "A_e" << i + 1 << ":\n";
            auto m = a.operator_of(g.basis_vector(i));
            for (int r = 0; r < m.rows(); ++r) {
                std::cout << "  ";
                for (int c = 0; c < m.cols(); ++c) std::cout << m.at(r, c).str() << " ";
                std::cout << "\n";
            }
        }
        std::cout << "flat: " << bool_str(rplie::is_flat(g, a)) << "\n";
    }
    return kExitTrue;
}

int run_flat_kahler(const Options& opt, const std::string& path) {
    auto doc = rplie::io::parse(read_file(path));
    auto g = rplie::io::document_algebra(doc);
    auto rho = rplie::io::document_metric(doc);
    auto split = rplie::milnor_flat_check(g, rho);
    if (!split.flat || g.dim() % 2 != 0) {
        if (opt.json)
            std::cout << rplie::io::emit_flat_kahler(split, nullptr, false);
        else
            std::cout << "flat: " << bool_str(split.flat) << (g.dim() % 2 ? " (odd dimension)" : "")
                      << "\n";
        return kExitFalse;
    }
    auto omega = rplie::flat_kahler_form(g, rho);
    bool ok = rplie::kahler_check(g, rho, omega);
    if (opt.json) {
        std::cout << rplie::io::emit_flat_kahler(split, &omega, ok);
    } else {
        std::cout << "flat: true\nomega:\n";
        for (int i = 0; i < g.dim(); ++i) {
            std::cout << "  ";
            for (int j = 0; j < g.dim(); ++j) std::cout << omega.at(i, j).str() << " ";
            std::cout << "\n";
        }
        std::cout << "kahler check: " << bool_str(ok) << "\n";
    }
    return ok ? kExitTrue : kExitInternal;
}

int run_sl2(const Options& opt, const std::string& path) {
    auto doc = rplie::io::parse(read_file(path));
    auto s = rplie::io::document_sl2(doc);
    auto c = rplie::classify(s);
    if (opt.json)
        std::cout << rplie::io::emit_sl2(c);
    else
        std::cout << c.name() << "\n";
    return c.kind == rplie::Sl2Class::NotSubalgebra ? kExitFalse : kExitTrue;
}

int run_construct(const Options& opt, const std::string& path) {
    auto doc = rplie::io::parse(read_file(path));
    auto data = rplie::io::document_construction(doc);
    if (auto bad = data.invariant_violation()) throw std::invalid_argument(*bad);
    auto eqpro = rplie::check_eqpro(data);
    if (!eqpro.all()) {
        if (opt.json)
            std::cout << rplie::io::emit_construct(eqpro, nullptr, nullptr);
        else
            std::cout << "compatibility failure: " << eqpro.first_failure << "\n";
        return kExitFalse;
    }
    auto t = rplie::assemble(data);
    auto rep = rplie::is_riemann_poisson(t.algebra, t.r, t.rho);
    if (opt.json) {
        std::cout << rplie::io::emit_construct(eqpro, &rep, &t);
    } else {
        std::cout << "compatibility: ok\nassembled document:\n";
        std::cout << rplie::io::serialize(rplie::io::document_from_triple(t));
        std::cout << "riemann-poisson: " << bool_str(rep.verdict) << "\n";
    }
    return rep.verdict ? kExitTrue : kExitFalse;
}

int run_catalog_verify(const Options& opt, int table, int row, int samples, uint64_t seed) {
    auto all = rplie::families();
    std::vector<rplie::FamilyReport> reports;
    bool all_pass = true;
    for (const auto& f : all) {
        if (table > 0 && f.table != table) continue;
        if (row > 0 && f.row != row) continue;
        auto rep = rplie::verify_family(f, samples, seed);
        all_pass = all_pass && rep.all_passed;
        reports.push_back(std::move(rep));
    }
    if (reports.empty()) {
        std::cerr << "no catalog rows match the filter\n";
        return kExitInput;
    }
    if (opt.json) {
        std::cout << rplie::io::emit_catalog_report(reports, samples, seed);
    } else {
        for (const auto& r : reports) {
            std::cout << r.id << ": " << r.verbatim_passed << "/" << r.samples << " verbatim";
            if (r.has_correction)
                std::cout << ", " << r.corrected_passed << "/" << r.samples << " corrected";
            if (r.used_correction) std::cout << "  [corrected variant used]";
            if (r.partial) std::cout << "  [partial metric family]";
            std::cout << (r.all_passed ? "  PASS" : "  FAIL") << "\n";
        }
        bool any_corr = false;
        for (const auto& r : reports)
            if (r.used_correction) {
                if (!any_corr) std::cout << "discrepancies:\n";
                any_corr = true;
                std::cout << "  " << r.id << ": " << r.correction_note << "\n";
            }
        std::cout << (all_pass ? "all rows pass" : "some rows FAILED") << "\n";
    }
    return all_pass ? kExitTrue : kExitFalse;
}

int run_catalog_show(const Options&, const std::string& id, uint64_t seed) {
    auto all = rplie::families();
    const rplie::Family* f = rplie::find_family(all, id);
    if (!f) {
        std::cerr << "unknown catalog id " << id << " (expected T<table>.R<row>)\n";
        return kExitInput;
    }
    rplie::Sampler s(seed);
    auto params = rplie::sample_params(*f, s);
    auto t = rplie::instantiate(*f, params);
    std::cout << "# " << f->id << " with";
    for (const auto& [k, v] : params) std::cout << " " << k << "=" << v.str();
    std::cout << "\n" << rplie::io::serialize(rplie::io::document_from_triple(t));
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann-Poisson Lie algebra toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--mode", opt.mode, "scalar field: rational|float")
        ->check(CLI::IsMember({"rational", "float"}))
        ->capture_default_str();
    app.add_option("--eps", opt.eps, "float-mode comparison tolerance")->capture_default_str();
    app.add_flag("--json", opt.json, "machine-readable report");
    app.add_flag("--human", opt.human, "human-readable report (default)");

    std::string path, catalog_id;
    int table = 0, row = 0, samples = 25;
    uint64_t seed = default_seed();

    auto* check = app.add_subcommand("check", "decide the Riemann-Poisson property");
    check->add_option("file", path)->required();
    auto* dec = app.add_subcommand("decompose", "kernel/image decomposition of the bivector");
    dec->add_option("file", path)->required();
    auto* lc = app.add_subcommand("levi-civita", "Levi-Civita product of the metric algebra");
    lc->add_option("file", path)->required();
    auto* fk = app.add_subcommand("flat-kahler", "flatness split and the induced 2-form");
    fk->add_option("file", path)->required();
    auto* sl2cmd = app.add_subcommand("sl2", "2x2 traceless matrix subalgebras");
    auto* sl2c = sl2cmd->add_subcommand("classify", "classify a 2-dimensional span");
    sl2c->add_option("file", path)->required();
    auto* cons = app.add_subcommand("construct", "assemble a triple from construction data");
    cons->add_option("file", path)->required();
    auto* cat = app.add_subcommand("catalog", "classification table families");
    auto* catv = cat->add_subcommand("verify", "verify table rows on random admissible samples");
    catv->add_option("--table", table, "restrict to one table");
    catv->add_option("--row", row, "restrict to one row");
    catv->add_option("--samples", samples, "samples per row")->capture_default_str();
    catv->add_option("--seed", seed, "sampling seed (default RPLIE_SEED or 0)");
    auto* cats = cat->add_subcommand("show", "print one instantiated row as an input document");
    cats->add_option("id", catalog_id, "row id, e.g. T3.R2")->required();
    cats->add_option("--seed", seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);
    opt.apply();

    try {
        if (*check) return run_check(opt, path);
        if (*dec) return run_decompose(opt, path);
        if (*lc) return run_levi_civita(opt, path);
        if (*fk) return run_flat_kahler(opt, path);
        if (*sl2c) return run_sl2(opt, path);
        if (*cons) return run_construct(opt, path);
        if (*catv) return run_catalog_verify(opt, table, row, samples, seed);
        if (*cats) return run_catalog_show(opt, catalog_id, seed);
        std::cerr << "missing subcommand\n";
        return kExitInput;
    } catch (const rplie::InternalInconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const rplie::io::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
}
