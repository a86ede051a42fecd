#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "evobound/bounds.hpp"
#include "evobound/dynamics.hpp"
#include "evobound/fuzz.hpp"
#include "evobound/grover.hpp"

namespace evobound {

enum class OutputFormat { Csv, Json };

/// Locale-free rendering with 15 significant digits, enough to round-trip
/// through text at < 1e-12 relative error.
std::string format_double(double v);

/// Fixed-header table rendered either as CSV (LF endings, UTF-8) or as a
/// JSON array of objects with identical field names. Cells are JSON values:
/// numbers, strings, booleans, or null (empty CSV field).
class ReportTable {
public:
    explicit ReportTable(std::vector<std::string> columns);

    void add_row(std::vector<nlohmann::json> cells);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    const nlohmann::json& cell(std::size_t row, std::size_t col) const;

    std::string to_csv() const;
    std::string to_json() const;
    std::string render(OutputFormat format) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<nlohmann::json>> rows_;
};

// Table builders, one per report kind. Headers are fixed; downstream
// consumers diff these files.

/// t, dev_actual, bound_linear, bound_gronwall, bound_closed_form
ReportTable evolution_report(const EvolutionTrace& trace, const EnvelopeNorm& env);

/// t, bound_linear, bound_gronwall, bound_closed_form
ReportTable bound_report(const BoundCurve& curve);

/// t, bound_timedep, bound_timeindep on the grid {k pi/omega, k = 0..n_periods}
ReportTable comparison_report(double gamma, double omega, int n_periods);

/// gamma, envelope, T, dev_bound, psucc_sim, psucc_lower, certified
ReportTable robustness_report_table(const RobustnessReport& report);

/// instance, dim, gamma, T, dev_actual, bound_linear, bound_gronwall,
/// margin_linear, margin_gronwall, pass
ReportTable fuzz_report_table(const std::vector<FuzzOutcome>& outcomes);

}  // namespace evobound
