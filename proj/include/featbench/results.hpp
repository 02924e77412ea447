#pragma once

#include <string>
#include <vector>

#include "featbench/classifier.hpp"
#include "featbench/dataset.hpp"

namespace featbench {

/// Fraction of matching entries.
double accuracy(const std::vector<int>& predicted, const std::vector<int>& actual);

/// mean ± population standard deviation over repeated splits. A failed
/// cell keeps its first error message and renders as "—".
struct ResultCell {
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t runs = 0;
    bool failed = false;
    std::string error;
};

ResultCell aggregate(const std::vector<double>& accuracies);

struct ResultRow {
    Method method;
    Layer layer;
    std::vector<ResultCell> cells;  // one per table column
};

struct ResultTable {
    std::vector<std::string> columns;  // task keys in canonical order
    std::vector<ResultRow> rows;

    bool has_failures() const;
};

enum class TableStyle { Tsv, Markdown };

/// Accuracies as percentages with one decimal, "93.7±0.1"; failed cells
/// render as "—". Output is deterministic.
std::string render_table(const ResultTable& table, TableStyle style);

/// Error messages of failed cells, one line each; empty when none failed.
std::string render_diagnostics(const ResultTable& table);

/// Grouped bar chart (one group per task, one bar per row) as a standalone
/// SVG with a 0–100% axis; byte output is deterministic for a given table.
std::string render_chart_svg(const ResultTable& table);
void render_chart(const ResultTable& table, const std::string& path);

}  // namespace featbench
