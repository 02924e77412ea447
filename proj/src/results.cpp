#include "featbench/results.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>

#include "featbench/errors.hpp"

namespace featbench {

double accuracy(const std::vector<int>& predicted, const std::vector<int>& actual) {
    if (predicted.size() != actual.size())
        throw LengthMismatch("accuracy: prediction and label counts differ");
    if (predicted.empty()) throw EmptyInput("accuracy: no predictions");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        if (predicted[i] == actual[i]) ++matches;
    return static_cast<double>(matches) / static_cast<double>(predicted.size());
}

ResultCell aggregate(const std::vector<double>& accuracies) {
    if (accuracies.empty()) throw EmptyInput("aggregate: no values");
    double mean = 0.0;
    for (double a : accuracies) {
        if (a < 0.0 || a > 1.0 || !std::isfinite(a))
            throw InvalidArgument("aggregate: accuracy outside [0, 1]");
        mean += a;
    }
    mean /= static_cast<double>(accuracies.size());
    bool constant = true;
    for (double a : accuracies) constant &= a == accuracies.front();
    double var = 0.0;
    if (!constant) {
        for (double a : accuracies) var += (a - mean) * (a - mean);
        var /= static_cast<double>(accuracies.size());  // population variance
    }
    ResultCell cell;
    cell.mean = constant ? accuracies.front() : mean;
    cell.stddev = std::sqrt(var);
    cell.runs = accuracies.size();
    return cell;
}

bool ResultTable::has_failures() const {
    for (const ResultRow& row : rows)
        for (const ResultCell& cell : row.cells)
            if (cell.failed) return true;
    return false;
}

namespace {

std::string format_cell(const ResultCell& cell) {
    if (cell.failed) return "—";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f±%.1f", cell.mean * 100.0, cell.stddev * 100.0);
    return buf;
}

std::string row_label(const ResultRow& row) {
    return std::string(method_name(row.method));
}

}  // namespace

std::string render_table(const ResultTable& table, TableStyle style) {
    std::string out;
    const bool md = style == TableStyle::Markdown;
    const char* sep = md ? " | " : "\t";

    if (md) out += "| ";
    out += "method";
    out += sep;
    out += "layer";
    for (const std::string& col : table.columns) {
        out += sep;
        out += col;
    }
    if (md) out += " |";
    out += '\n';
    if (md) {
        out += "|";
        for (std::size_t i = 0; i < table.columns.size() + 2; ++i) out += " --- |";
        out += '\n';
    }
    for (const ResultRow& row : table.rows) {
        if (md) out += "| ";
        out += row_label(row);
        out += sep;
        out += layer_name(row.layer);
        for (const ResultCell& cell : row.cells) {
            out += sep;
            out += format_cell(cell);
        }
        if (md) out += " |";
        out += '\n';
    }
    return out;
}

std::string render_diagnostics(const ResultTable& table) {
    std::string out;
    for (const ResultRow& row : table.rows)
        for (std::size_t c = 0; c < row.cells.size(); ++c)
            if (row.cells[c].failed) {
                out += row_label(row);
                out += ' ';
                out += table.columns[c];
                out += ": ";
                out += row.cells[c].error;
                out += '\n';
            }
    return out;
}

namespace {

const char* kPalette[] = {"#4878d0", "#ee854a", "#6acc64", "#d65f5f", "#956cb4",
                          "#8c613c", "#dc7ec0", "#797979", "#d5bb67", "#82c6e2"};

void append_fmt(std::string& out, const char* fmt, ...) {
    char buf[256];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    out += buf;
}

}  // namespace

std::string render_chart_svg(const ResultTable& table) {
    const std::size_t groups = table.columns.size();
    const std::size_t bars = table.rows.size();
    const double bar_w = 14.0;
    const double group_gap = 18.0;
    const double plot_h = 300.0;
    const double ml = 56.0, mt = 24.0, mb = 72.0;
    const double group_w = bar_w * static_cast<double>(bars) + group_gap;
    const double plot_w = group_w * static_cast<double>(groups);
    const double legend_w = 140.0;
    const double width = ml + plot_w + legend_w;
    const double height = mt + plot_h + mb;

    std::string svg;
    append_fmt(svg,
               "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
               "viewBox=\"0 0 %.0f %.0f\">\n",
               width, height, width, height);
    svg += "<style>text{font-family:sans-serif;font-size:11px;}</style>\n";
    append_fmt(svg, "<rect x=\"0\" y=\"0\" width=\"%.0f\" height=\"%.0f\" fill=\"white\"/>\n",
               width, height);

    // axis and gridlines, 0..100%
    for (int pct = 0; pct <= 100; pct += 20) {
        const double y = mt + plot_h * (1.0 - pct / 100.0);
        append_fmt(svg,
                   "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" "
                   "stroke=\"#dddddd\"/>\n",
                   ml, y, ml + plot_w, y);
        append_fmt(svg, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%d%%</text>\n",
                   ml - 6.0, y + 4.0, pct);
    }
    append_fmt(svg,
               "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
               ml, mt, ml, mt + plot_h);
    append_fmt(svg,
               "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n",
               ml, mt + plot_h, ml + plot_w, mt + plot_h);

    for (std::size_t g = 0; g < groups; ++g) {
        const double gx = ml + group_w * static_cast<double>(g) + group_gap / 2.0;
        for (std::size_t b = 0; b < bars; ++b) {
            const ResultCell& cell = table.rows[b].cells[g];
            if (cell.failed) continue;
            const double h = plot_h * cell.mean;
            append_fmt(svg,
                       "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                       "fill=\"%s\"/>\n",
                       gx + bar_w * static_cast<double>(b), mt + plot_h - h, bar_w - 2.0, h,
                       kPalette[b % 10]);
        }
        const double cx = gx + bar_w * static_cast<double>(bars) / 2.0;
        append_fmt(svg,
                   "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" "
                   "transform=\"rotate(-45 %.2f %.2f)\">%s</text>\n",
                   cx, mt + plot_h + 14.0, cx, mt + plot_h + 14.0, table.columns[g].c_str());
    }

    for (std::size_t b = 0; b < bars; ++b) {
        const double ly = mt + 16.0 * static_cast<double>(b);
        append_fmt(svg,
                   "<rect x=\"%.1f\" y=\"%.1f\" width=\"12\" height=\"12\" fill=\"%s\"/>\n",
                   ml + plot_w + 16.0, ly, kPalette[b % 10]);
        append_fmt(svg, "<text x=\"%.1f\" y=\"%.1f\">%s %s</text>\n", ml + plot_w + 32.0,
                   ly + 10.0, row_label(table.rows[b]).c_str(),
                   std::string(layer_name(table.rows[b].layer)).c_str());
    }
    svg += "</svg>\n";
    return svg;
}

void render_chart(const ResultTable& table, const std::string& path) {
    const std::string svg = render_chart_svg(table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot create '" + path + "'");
    out << svg;
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace featbench
