// gendo_cli: invariant reports for Nakayama and gendo-symmetric algebras.
#include "gendo/error.hpp"
#include "gendo/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace gendo;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, InputError = 1, SuiteFailure = 2, ScanViolation = 3 };

void emit(const json& j, const RunConfig& c)
{
    if (c.format == "text")
        std::cout << render_text(j);
    else
        std::cout << j.dump(2) << '\n';
}

KupischSeries series_from(const std::string& text, bool linear)
{
    return validate_kupisch(parse_series(text), !linear);
}

Fixture fixture_from(const std::string& name, const std::string& algebra_file,
                     const std::vector<std::string>& summands, const RunConfig& c)
{
    if (!name.empty()) return make_fixture(name, c.dims);
    if (algebra_file.empty()) throw Error(ErrorKind::InvalidInput, "need --fixture or --algebra");
    Fixture f;
    f.base = algebra_from_json(json::parse(read_file(algebra_file)));
    f.name = f.base->name();
    if (summands.empty()) throw Error(ErrorKind::InvalidInput, "--algebra needs at least one --summand");
    Rng rng(c.dims.seed);
    for (const auto& s : summands)
        for (auto& d : indecomposable_summands(parse_module_spec(f.base, s), rng)) f.summands.push_back(std::move(d));
    return f;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dominant, Gorenstein and Gorenstein-projective invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string field = "F2";
    app.add_option("--field", field, "F<p> for a prime p, or GF4")->capture_default_str();
    app.add_option("--cutoff", cfg.dims.cutoff, "resolution and Ext cutoff")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", cfg.dims.seed, "random seed")->capture_default_str();
    app.add_option("--format", cfg.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads for scan")->check(CLI::PositiveNumber)->capture_default_str();

    // nakayama
    auto* nak = app.add_subcommand("nakayama", "report for a Nakayama algebra given by its Kupisch series");
    std::string nak_series;
    bool nak_linear = false;
    nak->add_option("series", nak_series, "comma separated, e.g. 4,5,5")->required();
    auto* cyc = nak->add_flag("--cyclic", "cyclic quiver (default)");
    nak->add_flag("--linear", nak_linear, "linear quiver")->excludes(cyc);

    // endo
    auto* endo = app.add_subcommand("endo", "report for End(M) of a generator");
    std::string endo_fixture, endo_algebra;
    std::vector<std::string> endo_summands;
    auto* ef = endo->add_option("--fixture", endo_fixture, "named fixture");
    endo->add_option("--algebra", endo_algebra, "algebra JSON file")->excludes(ef);
    endo->add_option("--summand", endo_summands, "module spec of a summand of M (repeatable)");

    // module
    auto* mod = app.add_subcommand("module", "report for one module");
    std::string mod_fixture, mod_algebra, mod_nak, mod_base, mod_hom, mod_file;
    auto* mf = mod->add_option("--fixture", mod_fixture, "named fixture");
    mod->add_option("--algebra", mod_algebra, "algebra JSON file")->excludes(mf);
    auto* src = mod->add_option_group("source");
    src->add_option("--nak", mod_nak, "i,k coordinates on a Nakayama fixture");
    src->add_option("--base", mod_base, "module spec over the base algebra");
    src->add_option("--hom-image", mod_hom, "Hom(M, spec) over the endomorphism algebra of a fixture");
    src->add_option("--module", mod_file, "module JSON file");
    src->require_option(1);

    // scan
    auto* scan = app.add_subcommand("scan", "bound checks over all cyclic Kupisch series");
    std::size_t n_max = 3, c_max = 7;
    scan->add_option("--n-max", n_max)->capture_default_str();
    scan->add_option("--c-max", c_max)->capture_default_str();
    std::string scan_out;
    scan->add_option("--out", scan_out, "write to a file instead of stdout");

    // suite
    auto* suite = app.add_subcommand("suite", "theorem checks on fixtures");
    std::string suite_fixture;
    bool suite_all = false;
    auto* sf = suite->add_option("--fixture", suite_fixture, "named fixture");
    suite->add_flag("--all", suite_all, "every fixture")->excludes(sf);

    // export
    auto* exp = app.add_subcommand("export", "write a fixture's algebra (or its endomorphism algebra) as JSON");
    std::string exp_fixture;
    bool exp_endo = false;
    exp->add_option("--fixture", exp_fixture)->required();
    exp->add_flag("--endo", exp_endo, "export End(M) instead of the base");

    // fixtures
    auto* list = app.add_subcommand("fixtures", "list fixture names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : InputError;
    }

    try {
        cfg.field = Field::parse(field);
        if (list->parsed()) {
            for (const auto& n : fixture_names()) std::cout << n << '\n';
            return Ok;
        }
        if (nak->parsed()) {
            auto s = series_from(nak_series, nak_linear);
            emit(nakayama_report(s, cfg), cfg);
            return Ok;
        }
        if (endo->parsed()) {
            auto f = fixture_from(endo_fixture, endo_algebra, endo_summands, cfg);
            if (f.summands.empty()) throw Error(ErrorKind::InvalidInput, f.name + " is a Nakayama fixture; use nakayama");
            bool failed = false;
            emit(endo_report(f, cfg, &failed), cfg);
            return failed ? SuiteFailure : Ok;
        }
        if (mod->parsed()) {
            json j = report_header(cfg);
            if (!mod_hom.empty()) {
                auto f = fixture_from(mod_fixture, mod_algebra, {}, cfg);
                if (f.summands.empty()) throw Error(ErrorKind::InvalidInput, "--hom-image needs an endo fixture");
                auto g = make_gendo(f, cfg.dims);
                auto m = g->endo.functor(parse_module_spec(f.base, mod_hom, f.series));
                j["module"] = "Hom(M, " + mod_hom + ")";
                j["report"] = module_report(*g->endo_r, m);
            } else {
                AlgebraPtr a;
                std::optional<KupischSeries> series;
                if (!mod_fixture.empty()) {
                    auto f = make_fixture(mod_fixture, cfg.dims);
                    a = f.base;
                    series = f.series;
                } else if (!mod_algebra.empty()) {
                    a = algebra_from_json(json::parse(read_file(mod_algebra)));
                } else {
                    throw Error(ErrorKind::InvalidInput, "need --fixture or --algebra");
                }
                RightModule m;
                if (!mod_nak.empty()) {
                    if (!series) throw Error(ErrorKind::InvalidInput, "--nak needs a Nakayama fixture");
                    m = parse_module_spec(a, "(" + mod_nak + ")", series);
                    j["module"] = "(" + mod_nak + ")";
                } else if (!mod_base.empty()) {
                    m = parse_module_spec(a, mod_base, series);
                    j["module"] = mod_base;
                } else {
                    m = module_from_json(a, json::parse(read_file(mod_file)));
                    j["module"] = mod_file;
                }
                Resolver r(a, cfg.dims);
                j["report"] = module_report(r, m);
            }
            emit(j, cfg);
            return Ok;
        }
        if (scan->parsed()) {
            auto rows = scan_series(n_max, c_max, cfg);
            std::string body = cfg.format == "csv" ? scan_csv(rows, cfg)
                             : cfg.format == "json" ? scan_json(rows, cfg).dump(2) + "\n"
                                                    : render_text(scan_json(rows, cfg));
            if (scan_out.empty()) {
                std::cout << body;
            } else {
                std::ofstream out(scan_out);
                if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + scan_out);
                out << body;
            }
            for (const auto& r : rows)
                if (r.violation()) return ScanViolation;
            return Ok;
        }
        if (suite->parsed()) {
            std::vector<std::string> names;
            if (suite_all)
                names = fixture_names();
            else if (!suite_fixture.empty())
                names = {suite_fixture};
            else
                throw Error(ErrorKind::InvalidInput, "need --fixture or --all");
            json all = report_header(cfg);
            all["fixtures"] = json::array();
            bool any = false;
            for (const auto& n : names) {
                bool fail = false;
                auto j = suite_report(make_fixture(n, cfg.dims), cfg, &fail);
                all["fixtures"].push_back({{"fixture", n}, {"checks", j["checks"]}, {"failed", fail}});
                any = any || fail;
            }
            emit(all, cfg);
            return any ? SuiteFailure : Ok;
        }
        if (exp->parsed()) {
            auto f = make_fixture(exp_fixture, cfg.dims);
            if (exp_endo) {
                if (f.summands.empty()) throw Error(ErrorKind::InvalidInput, f.name + " has no generator");
                std::cout << algebra_to_json(*gendo::endo_algebra(f.summands, f.name + "-endo").algebra).dump(2) << '\n';
            } else {
                std::cout << algebra_to_json(*f.base).dump(2) << '\n';
            }
            return Ok;
        }
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return InputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
    return InputError;
}
