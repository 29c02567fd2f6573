#include "gendo/report.hpp"

#include "gendo/error.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

namespace gendo {

using nlohmann::json;

json report_header(const RunConfig& c)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = c.dims.seed;
    j["cutoff"] = c.dims.cutoff;
    j["field"] = c.field.name();
    return j;
}

namespace {

json module_set(const std::set<NakModule>& s)
{
    json a = json::array();
    for (const auto& m : s) a.push_back(m.to_string());
    return a;
}

std::string series_text(const KupischSeries& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.c.size(); ++i) out += (i ? "," : "") + std::to_string(s.c[i]);
    return out;
}

std::string table_cell(const std::vector<HomologicalDim>& ds)
{
    std::set<std::string> vals;
    for (const auto& d : ds) vals.insert(d.is_finite() && d.value < 2 ? "-" : d.to_string());
    std::string out;
    for (const auto& v : vals) out += (out.empty() ? "" : "/") + v;
    return out;
}

}  // namespace

json nakayama_report(const KupischSeries& s, const RunConfig& c)
{
    NakAlgebra a(s);
    json j = report_header(c);
    j["series"] = series_text(s);
    j["cyclic"] = s.cyclic;
    j["selfinjective"] = a.selfinjective();
    j["symmetric"] = a.symmetric();
    auto inv = algebra_invariants_nak(a);
    j["domdim"] = dim_to_json(inv.domdim, c.dims.cutoff);
    j["gordim"] = {{"right", dim_to_json(inv.gordim_right, c.dims.cutoff)}, {"left", dim_to_json(inv.gordim_left, c.dims.cutoff)}};
    j["fdomdim"] = dim_to_json(inv.fdomdim, c.dims.cutoff);
    j["gorenstein_dominant"] = inv.gorenstein_dominant;

    json mods = json::array();
    const std::size_t n = a.n();
    std::vector<std::vector<std::vector<HomologicalDim>>> cells(n, std::vector<std::vector<HomologicalDim>>(n));
    for (auto m : a.indecomposables()) {
        auto d = dims_nak(a, m);
        json row;
        row["module"] = m.to_string();
        row["projdim"] = dim_to_json(d.projdim, c.dims.cutoff);
        row["injdim"] = dim_to_json(d.injdim, c.dims.cutoff);
        row["domdim"] = dim_to_json(d.domdim, c.dims.cutoff);
        row["codomdim"] = dim_to_json(d.codomdim, c.dims.cutoff);
        mods.push_back(row);
        cells[m.k % n][m.i].push_back(d.domdim);
    }
    j["modules"] = mods;
    // values below 2 print as "-"
    json table = json::array();
    for (std::size_t r = 0; r < n; ++r) {
        json row = json::array();
        for (std::size_t v = 0; v < n; ++v) row.push_back(table_cell(cells[r][v]));
        table.push_back(row);
    }
    j["domdim_table"] = {{"rows", "k mod " + std::to_string(n)}, {"columns", "vertex"}, {"cells", table}};

    if (s.cyclic && !a.selfinjective()) {
        auto q = resolution_quiver(a);
        j["resolution_quiver"] = {{"successor", q.successor},
                                  {"black", std::vector<std::size_t>(q.black.begin(), q.black.end())},
                                  {"cyclically_black",
                                   std::vector<std::size_t>(q.cyclically_black.begin(), q.cyclically_black.end())}};
    }
    j["gp"] = module_set(gp_indecs(a));
    j["gi"] = module_set(gi_indecs(a));
    j["gpi"] = module_set(gpi_indecs(a));
    auto ng = nearly_gorenstein_check_nak(a, c.field, c.dims);
    j["nearly_gorenstein"] = {{"ok", ng.ok}, {"witness", ng.witness}};
    return j;
}

json module_report(Resolver& r, const RightModule& m)
{
    json j;
    j["dim"] = m.dim();
    j["dim_vector"] = m.vdim;
    j["projdim"] = dim_to_json(r.projdim(m), r.options().cutoff);
    j["injdim"] = dim_to_json(r.injdim(m), r.options().cutoff);
    j["domdim"] = dim_to_json(r.domdim(m), r.options().cutoff);
    j["codomdim"] = dim_to_json(r.codomdim(m), r.options().cutoff);
    j["gp"] = verdict_to_json(gp_test(r, m));
    j["gi"] = verdict_to_json(gi_test(r, m));
    j["gpi"] = verdict_to_json(gpi_test(r, m));
    return j;
}

json suite_report(const Fixture& f, const RunConfig& c, bool* any_fail)
{
    json j = report_header(c);
    j["fixture"] = f.name;
    json checks = json::array();
    bool fail = false;
    for (const auto& r : theorem_suite(f, c.dims)) {
        checks.push_back({{"id", r.id}, {"title", r.title}, {"status", to_string(r.status)}, {"detail", r.detail}});
        fail = fail || r.status == CheckResult::Status::Fail;
    }
    j["checks"] = checks;
    if (any_fail) *any_fail = fail;
    return j;
}

json endo_report(const Fixture& f, const RunConfig& c, bool* suite_failed)
{
    json j = report_header(c);
    j["fixture"] = f.name;
    if (!f.note.empty()) j["note"] = f.note;
    auto g = make_gendo(f, c.dims);
    j["base_algebra"] = {{"name", f.base->name()}, {"dim", f.base->dim()}, {"symmetric", f.base_symmetric}};
    json dims = json::array();
    for (const auto& s : f.summands) dims.push_back(s.dim());
    j["summand_dims"] = dims;
    j["endo_dim"] = g->endo.algebra->dim();
    auto& r = *g->endo_r;
    j["domdim"] = dim_to_json(algebra_domdim(r), c.dims.cutoff);
    j["codomdim"] = dim_to_json(algebra_codomdim(r), c.dims.cutoff);
    auto gd = gorenstein_dims(r);
    j["gordim"] = {{"right", dim_to_json(gd.right, c.dims.cutoff)}, {"left", dim_to_json(gd.left, c.dims.cutoff)}};
    j["gorenstein"] = gd.gorenstein();
    j["gendo_symmetric"] = gendo_symmetric_check(r);
    try {
        j["mueller_domdim"] = dim_to_json(mueller_domdim(*g->base_r, f.summands), c.dims.cutoff);
    } catch (const Error& e) {
        j["mueller_domdim"] = {{"error", e.what()}};
    }
    try {
        auto ck = chen_koenig_injdim(*g->base_r, f.summands, r);
        j["chen_koenig"] = {{"z", ck.z},
                            {"lhs", dim_to_json(ck.lhs, c.dims.cutoff)},
                            {"rhs", dim_to_json(ck.rhs, c.dims.cutoff)},
                            {"lhs_left", dim_to_json(ck.lhs_left, c.dims.cutoff)},
                            {"rhs_left", dim_to_json(ck.rhs_left, c.dims.cutoff)}};
    } catch (const Error& e) {
        j["chen_koenig"] = {{"error", e.what()}};
    }
    auto fd = endo_fdomdim(*g);
    j["fdomdim"] = dim_to_json(fd, c.dims.cutoff);
    if (!fd.certified()) j["fdomdim_note"] = "lower bound: base module pool incomplete";
    j["base_pool"] = {{"size", g->base_pool.modules.size()}, {"complete", g->base_pool.complete}};
    std::size_t gpi = 0;
    for (const auto& x : g->endo_pool)
        if (!is_projective(x) && gpi_test(r, x).yes()) ++gpi;
    j["nonprojective_gpi_in_pool"] = gpi;
    bool failed = false;
    j["suite"] = suite_report(f, c, &failed)["checks"];
    if (suite_failed) *suite_failed = failed;
    return j;
}

ScanRow scan_row(const KupischSeries& s, const RunConfig& c)
{
    NakAlgebra a(s);
    ScanRow row;
    row.series = s;
    auto inv = algebra_invariants_nak(a);
    row.domdim = inv.domdim;
    row.gordim_right = inv.gordim_right;
    row.gordim_left = inv.gordim_left;
    row.fdomdim = inv.fdomdim;
    row.gp_count = gp_indecs(a).size();
    row.gorenstein_dominant = inv.gorenstein_dominant;
    row.nearly_gorenstein = nearly_gorenstein_check_nak(a, c.field, c.dims).ok;
    Resolver r(from_kupisch(s, c.field), c.dims);
    row.gendo_symmetric = gendo_symmetric_check(r);
    const std::size_t n = a.n();
    row.viol_2n2 = inv.fdomdim.value > (n >= 1 ? 2 * n - 2 : 0) && !a.selfinjective();
    bool gor = inv.gordim_right.is_finite() && inv.gordim_right == inv.gordim_left;
    row.viol_g1 = row.gendo_symmetric && gor && inv.fdomdim.value > inv.gordim_right.value + 1;
    row.viol_dominant = !inv.gorenstein_dominant;
    return row;
}

std::vector<ScanRow> scan_series(std::size_t n_max, std::size_t c_max, const RunConfig& c)
{
    if (c_max < 2) throw Error(ErrorKind::InvalidInput, "c_max must be at least 2");
    double budget = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        double t = 1;
        for (std::size_t i = 0; i < n; ++i) t *= static_cast<double>(c_max - 1);
        budget += t;
    }
    if (budget > 200000) throw Error(ErrorKind::BudgetExceeded, "scan bounds give " + std::to_string((long long)budget) + " candidates");

    std::vector<KupischSeries> all;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<std::size_t> cv(n, 2);
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == n) {
                try {
                    all.push_back(validate_kupisch(cv, true));
                } catch (const Error&) {
                }
                return;
            }
            for (std::size_t v = 2; v <= c_max; ++v) {
                cv[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
    std::vector<ScanRow> rows(all.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < all.size(); i = next++) rows[i] = scan_row(all[i], c);
    };
    const unsigned jobs = std::max(1u, c.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows, const RunConfig& c)
{
    std::ostringstream out;
    out << "schema_version,seed,series,n,domdim,gordim_right,gordim_left,fdomdim,gp_count,gorenstein_dominant,"
           "nearly_gorenstein,gendo_symmetric,viol_2n2,viol_g1,viol_dominant\n";
    for (const auto& r : rows)
        out << kSchemaVersion << ',' << c.dims.seed << ",\"" << series_text(r.series) << "\"," << r.series.n() << ','
            << r.domdim.to_string() << ',' << r.gordim_right.to_string() << ',' << r.gordim_left.to_string() << ','
            << r.fdomdim.to_string() << ',' << r.gp_count << ',' << r.gorenstein_dominant << ',' << r.nearly_gorenstein
            << ',' << r.gendo_symmetric << ',' << r.viol_2n2 << ',' << r.viol_g1 << ',' << r.viol_dominant << '\n';
    return out.str();
}

json scan_json(const std::vector<ScanRow>& rows, const RunConfig& c)
{
    json j = report_header(c);
    json a = json::array();
    std::size_t bad = 0;
    for (const auto& r : rows) {
        a.push_back({{"series", series_text(r.series)},
                     {"domdim", dim_to_json(r.domdim, c.dims.cutoff)},
                     {"gordim_right", dim_to_json(r.gordim_right, c.dims.cutoff)},
                     {"gordim_left", dim_to_json(r.gordim_left, c.dims.cutoff)},
                     {"fdomdim", dim_to_json(r.fdomdim, c.dims.cutoff)},
                     {"gp_count", r.gp_count},
                     {"gorenstein_dominant", r.gorenstein_dominant},
                     {"nearly_gorenstein", r.nearly_gorenstein},
                     {"gendo_symmetric", r.gendo_symmetric},
                     {"viol_2n2", r.viol_2n2},
                     {"viol_g1", r.viol_g1},
                     {"viol_dominant", r.viol_dominant}});
        bad += r.violation();
    }
    j["rows"] = a;
    j["violations"] = bad;
    return j;
}

namespace {

void render(std::ostringstream& out, const json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":";
            // dimensions print on one line
            if (v.contains("kind")) {
                out << ' ' << v["kind"].get<std::string>();
                if (v.contains("value")) out << ' ' << v["value"];
                if (v.contains("at_least")) out << " (cutoff " << v["cutoff"] << ")";
                if (v.contains("certificate")) out << " [" << v["certificate"].get<std::string>() << "]";
                out << '\n';
            } else {
                out << '\n';
                render(out, v, indent + 1);
            }
        } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
            out << pad << it.key() << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    std::ostringstream line;
                    bool first = true;
                    for (auto f = e.begin(); f != e.end(); ++f) {
                        line << (first ? "" : ", ") << f.key() << "=";
                        const auto& x = f.value();
                        if (x.is_object() && x.contains("kind"))
                            line << (x.contains("value") ? x["value"].dump() : x["kind"].get<std::string>());
                        else if (x.is_string())
                            line << x.get<std::string>();
                        else
                            line << x.dump();
                        first = false;
                    }
                    out << pad << "  " << line.str() << '\n';
                } else {
                    out << pad << "  " << e.dump() << '\n';
                }
            }
        } else if (v.is_string()) {
            out << pad << it.key() << ": " << v.get<std::string>() << '\n';
        } else {
            out << pad << it.key() << ": " << v.dump() << '\n';
        }
    }
}

}  // namespace

std::string render_text(const json& j)
{
    std::ostringstream out;
    render(out, j, 0);
    return out.str();
}

}  // namespace gendo
