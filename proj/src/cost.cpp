#include "quditcolor/cost.hpp"

#include <array>
#include <ostream>

#include <json.hpp>

namespace qcolor {

namespace {

struct TernaryBaselineRow {
    int n;
    long long recent;          // comparator-based ternary synthesis
    long long earlier;         // earlier ternary synthesis
    bool earlier_upper_bound;
};

// Published ternary oracle gate costs for 3..5 vertices.
constexpr std::array<TernaryBaselineRow, 3> kTernaryBaselines{{
    {3, 106, 343, false},
    {4, 298, 1000, true},
    {5, 494, 2700, true},
}};

double reduction(long long baseline, long long ours) {
    return 100.0 * static_cast<double>(baseline - ours) / static_cast<double>(baseline);
}

} // namespace

CostReport analyze(const OracleCircuit& oracle) {
    const RegisterLayout& layout = oracle.layout();
    CostReport report;
    report.n = layout.n;
    report.k = layout.k;
    report.d = layout.d;
    report.data_qudits = layout.m;
    report.ancilla_qudits = layout.r + (layout.has_invalid_flag ? 1 : 0);
    report.total_qudits = layout.total_wires();

    const GateCounts counts = oracle.circuit().gate_count();
    report.gate_count_total = counts.total;
    report.gate_count_by_kind = counts.by_kind;
    report.gate_count_by_arity = counts.by_arity;
    for (const PlacedGate& g : oracle.circuit().gates()) {
        const std::size_t nc = g.controls.size();
        report.two_wire_equivalent += nc >= 2 ? 2 * nc - 1 : 1;
    }
    report.depth = oracle.circuit().depth();
    return report;
}

void compare_ternary_baselines(CostReport& report) {
    if (report.d != 3) {
        report.notes.push_back("ternary baselines apply to d=3 only; skipped for d=" +
                               std::to_string(report.d));
        return;
    }
    for (const auto& row : kTernaryBaselines) {
        if (row.n != report.n) continue;
        const long long ours = static_cast<long long>(report.gate_count_total);
        report.baseline_comparisons.push_back(BaselineComparison{
            "ternary-comparator-synthesis", row.recent, false, ours, reduction(row.recent, ours)});
        report.baseline_comparisons.push_back(BaselineComparison{
            "ternary-earlier-synthesis", row.earlier, row.earlier_upper_bound, ours,
            reduction(row.earlier, ours)});
        return;
    }
    report.notes.push_back("no published ternary baseline for n=" + std::to_string(report.n));
}

void compare_binary_baselines(CostReport& report) {
    if (report.d != 2) {
        report.notes.push_back("binary data-qubit baseline applies to d=2 only");
        return;
    }
    const long long baseline = static_cast<long long>(report.n) * report.k;
    report.baseline_comparisons.push_back(
        BaselineComparison{"binary-sat-reduction-data-qubits", baseline, false,
                           report.data_qudits, reduction(baseline, report.data_qudits)});
}

std::string cost_report_json(const CostReport& report) {
    nlohmann::json doc;
    doc["n"] = report.n;
    doc["k"] = report.k;
    doc["d"] = report.d;
    doc["data_qudits"] = report.data_qudits;
    doc["ancilla_qudits"] = report.ancilla_qudits;
    doc["output_qudits"] = report.output_qudits;
    doc["total_qudits"] = report.total_qudits;
    doc["gate_count_total"] = report.gate_count_total;
    doc["gate_count_by_kind"] = report.gate_count_by_kind;
    nlohmann::json arity = nlohmann::json::object();
    for (const auto& [a, c] : report.gate_count_by_arity) arity[std::to_string(a)] = c;
    doc["gate_count_by_arity"] = std::move(arity);
    doc["two_wire_equivalent_count"] = report.two_wire_equivalent;
    doc["depth"] = report.depth;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& b : report.baseline_comparisons)
        rows.push_back({{"baseline", b.baseline},
                        {"baseline_count", b.baseline_count},
                        {"baseline_is_upper_bound", b.baseline_is_upper_bound},
                        {"ours", b.our_count},
                        {"reduction_percent", b.reduction_percent}});
    doc["baseline_comparisons"] = std::move(rows);
    doc["notes"] = report.notes;
    return doc.dump(2);
}

void write_cost_report_text(std::ostream& out, const CostReport& report) {
    out << "instance            n=" << report.n << " k=" << report.k << " d=" << report.d << "\n";
    out << "data qudits         " << report.data_qudits << "\n";
    out << "ancilla qudits      " << report.ancilla_qudits << "\n";
    out << "output qudits       " << report.output_qudits << "\n";
    out << "total qudits        " << report.total_qudits << "\n";
    out << "gate count          " << report.gate_count_total << "\n";
    out << "two-wire equivalent " << report.two_wire_equivalent << "\n";
    out << "depth               " << report.depth << "\n";
    out << "gates by kind       ";
    bool first = true;
    for (const auto& [kind, count] : report.gate_count_by_kind) {
        out << (first ? "" : ", ") << kind << "=" << count;
        first = false;
    }
    out << "\n";
    out << "gates by arity      ";
    first = true;
    for (const auto& [arity, count] : report.gate_count_by_arity) {
        out << (first ? "" : ", ") << arity << "-wire=" << count;
        first = false;
    }
    out << "\n";
    for (const auto& b : report.baseline_comparisons) {
        out << "baseline            " << b.baseline << ": "
            << (b.baseline_is_upper_bound ? "<" : "") << b.baseline_count << " vs ours "
            << b.our_count << " (reduction ";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f%%", b.reduction_percent);
        out << buf << ")\n";
    }
    for (const auto& note : report.notes) out << "note                " << note << "\n";
}

} // namespace qcolor
