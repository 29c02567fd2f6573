#pragma once

#include "gendo/io.hpp"

#include <string>
#include <vector>

namespace gendo {

struct RunConfig {
    Field field = Field::prime(2);
    DimOptions dims;
    unsigned jobs = 1;
    std::string format = "text";  // json | csv | text
};

/// Every report starts with schema_version, seed, cutoff and field.
nlohmann::json report_header(const RunConfig& c);

/// Dimensions of every indecomposable, the domdim table (rows k mod n,
/// columns the vertex), the resolution quiver, GP/GI/GPI sets, algebra
/// invariants and the generic nearly-Gorenstein comparison.
nlohmann::json nakayama_report(const KupischSeries& s, const RunConfig& c);

/// Endomorphism algebra of the fixture's generator: dimensions, Gorenstein
/// dimensions, Mueller and Chen-Koenig cross-checks, the gendo-symmetric
/// test and the theorem suite. *suite_failed is set when a check fails.
nlohmann::json endo_report(const Fixture& f, const RunConfig& c, bool* suite_failed = nullptr);

/// Four dimensions and the GP/GI/GPI verdicts of m over r.
nlohmann::json module_report(Resolver& r, const RightModule& m);

nlohmann::json suite_report(const Fixture& f, const RunConfig& c, bool* any_fail);

struct ScanRow {
    KupischSeries series;
    HomologicalDim domdim, gordim_right, gordim_left, fdomdim;
    std::size_t gp_count = 0;
    bool gorenstein_dominant = false;
    bool nearly_gorenstein = false;
    bool gendo_symmetric = false;
    bool viol_2n2 = false;      // fdomdim > 2n - 2
    bool viol_g1 = false;       // gendo-symmetric Gorenstein with fdomdim > g + 1
    bool viol_dominant = false; // not Gorenstein dominant
    bool violation() const { return viol_2n2 || viol_g1 || viol_dominant || !nearly_gorenstein; }
};

/// Every valid cyclic series with 1 <= n <= n_max and entries in
/// [2, c_max], in lexicographic order per n. Throws BudgetExceeded past
/// 200000 candidate tuples.
std::vector<ScanRow> scan_series(std::size_t n_max, std::size_t c_max, const RunConfig& c);
ScanRow scan_row(const KupischSeries& s, const RunConfig& c);

/// Header line starts with schema_version; one row per series.
std::string scan_csv(const std::vector<ScanRow>& rows, const RunConfig& c);
nlohmann::json scan_json(const std::vector<ScanRow>& rows, const RunConfig& c);

/// Indented key: value rendering of a report.
std::string render_text(const nlohmann::json& j);

}  // namespace gendo
