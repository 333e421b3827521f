#pragma once

#include <iosfwd>
#include <optional>

#include "quditcolor/oracle.hpp"

namespace qcolor {

struct BaselineComparison {
    std::string baseline;
    long long baseline_count = 0;
    bool baseline_is_upper_bound = false;
    long long our_count = 0;
    double reduction_percent = 0.0;
};

struct CostReport {
    int n = 0;
    int k = 0;
    int d = 0;
    int data_qudits = 0;
    int ancilla_qudits = 0; // comparator ancillas plus the invalid flag
    int output_qudits = 1;
    int total_qudits = 0;
    std::size_t gate_count_total = 0;
    std::map<std::string, std::size_t> gate_count_by_kind;
    std::map<int, std::size_t> gate_count_by_arity;
    /// Secondary count: gates weighted by their borrowed-level two-wire
    /// expansion (2*controls - 1 for multi-controlled gates, 1 otherwise).
    std::size_t two_wire_equivalent = 0;
    int depth = 0;
    std::vector<BaselineComparison> baseline_comparisons;
    std::vector<std::string> notes;
};

CostReport analyze(const OracleCircuit& oracle);

/// Adds the published ternary gate-cost rows (n in 3..5) to the report.
/// Requires d == 3; outside the table a note is recorded instead.
void compare_ternary_baselines(CostReport& report);

/// Adds the binary data-qubit baseline row (n*k).
void compare_binary_baselines(CostReport& report);

std::string cost_report_json(const CostReport& report);
void write_cost_report_text(std::ostream& out, const CostReport& report);

} // namespace qcolor
