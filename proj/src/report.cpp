#include "evobound/report.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

namespace evobound {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

ReportTable::ReportTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) {
        throw std::invalid_argument("ReportTable: need at least one column");
    }
}

void ReportTable::add_row(std::vector<nlohmann::json> cells) {
    if (cells.size() != columns_.size()) {
        throw std::invalid_argument("ReportTable: row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

const nlohmann::json& ReportTable::cell(std::size_t row, std::size_t col) const {
    return rows_.at(row).at(col);
}

std::string ReportTable::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        if (c) out += ',';
        out += columns_[c];
    }
    out += '\n';
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            const auto& cell = row[c];
            if (cell.is_null()) {
                // empty field where the value is inapplicable
            } else if (cell.is_boolean()) {
                out += cell.get<bool>() ? "true" : "false";
            } else if (cell.is_number_integer()) {
                out += std::to_string(cell.get<long long>());
            } else if (cell.is_number()) {
                out += format_double(cell.get<double>());
            } else {
                out += cell.get<std::string>();
            }
        }
        out += '\n';
    }
    return out;
}

std::string ReportTable::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[columns_[c]] = row[c];
        }
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string ReportTable::render(OutputFormat format) const {
    return format == OutputFormat::Csv ? to_csv() : to_json();
}

ReportTable evolution_report(const EvolutionTrace& trace, const EnvelopeNorm& env) {
    ReportTable table({"t", "dev_actual", "bound_linear", "bound_gronwall", "bound_closed_form"});
    const BoundCurve curve = bound_curve(env, trace.times);
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        table.add_row({trace.times[i], trace.deviation[i], curve.linear[i], curve.gronwall[i],
                       curve.closed_form[i] ? nlohmann::json(*curve.closed_form[i])
                                            : nlohmann::json(nullptr)});
    }
    return table;
}

ReportTable bound_report(const BoundCurve& curve) {
    ReportTable table({"t", "bound_linear", "bound_gronwall", "bound_closed_form"});
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
        table.add_row({curve.times[i], curve.linear[i], curve.gronwall[i],
                       curve.closed_form[i] ? nlohmann::json(*curve.closed_form[i])
                                            : nlohmann::json(nullptr)});
    }
    return table;
}

ReportTable comparison_report(double gamma, double omega, int n_periods) {
    if (n_periods < 1) {
        throw std::invalid_argument("comparison_report: need at least one period");
    }
    ReportTable table({"t", "bound_timedep", "bound_timeindep"});
    for (int k = 0; k <= n_periods; ++k) {
        const double t = double(k) * kPi / omega;
        const double timedep = k == 0 ? 0.0 : bound_sinusoidal(gamma, omega, t);
        table.add_row({t, timedep, bound_constant(gamma, t)});
    }
    return table;
}

ReportTable robustness_report_table(const RobustnessReport& report) {
    ReportTable table({"gamma", "envelope", "T", "dev_bound", "psucc_sim", "psucc_lower",
                       "certified"});
    for (const auto& row : report.rows) {
        table.add_row({row.gamma, row.envelope, row.time, row.deviation_bound,
                       row.psucc_simulated, row.psucc_lower_bound, row.certified});
    }
    return table;
}

ReportTable fuzz_report_table(const std::vector<FuzzOutcome>& outcomes) {
    ReportTable table({"instance", "dim", "gamma", "T", "dev_actual", "bound_linear",
                       "bound_gronwall", "margin_linear", "margin_gronwall", "pass"});
    for (const auto& o : outcomes) {
        table.add_row({o.index, o.dim, o.gamma, o.t_final, o.dev_actual, o.bound_lin,
                       o.bound_gron, o.margin_linear, o.margin_gronwall, o.pass});
    }
    return table;
}

}  // namespace evobound
