#include "ghseq/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace ghseq {

namespace {

// Fixed canvas; data is mapped into the inner plot box.
constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 48.0;

struct Box {
    double x0 = kMarginLeft;
    double y0 = kMarginTop;
    double x1 = kWidth - kMarginRight;
    double y1 = kHeight - kMarginBottom;
};

// Two decimals is enough for pixel coordinates and keeps files small and
// byte-stable.
std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

std::ofstream open_svg(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + path.string());
    return out;
}

void write_header(std::ostream& out, std::string_view title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    out << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    out << "  <text x=\"" << px(kWidth / 2) << "\" y=\"28\" "
           "text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << escape_text(title) << "</text>\n";
}

void write_axes(std::ostream& out, const Box& box, std::string_view x_label,
                std::string_view y_label, double x_min, double x_max,
                double y_min, double y_max) {
    out << "  <rect x=\"" << px(box.x0) << "\" y=\"" << px(box.y0)
        << "\" width=\"" << px(box.x1 - box.x0) << "\" height=\""
        << px(box.y1 - box.y0)
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << px((box.x0 + box.x1) / 2) << "\" y=\""
        << px(kHeight - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << escape_text(x_label) << "</text>\n";
    out << "  <text x=\"16\" y=\"" << px((box.y0 + box.y1) / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\" transform=\"rotate(-90 16 "
        << px((box.y0 + box.y1) / 2) << ")\">" << escape_text(y_label)
        << "</text>\n";
    // Extremal tick labels only; the CSV carries the precise values.
    out << "  <text x=\"" << px(box.x0) << "\" y=\"" << px(box.y1 + 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"10\">"
        << static_cast<long long>(x_min) << "</text>\n";
    out << "  <text x=\"" << px(box.x1) << "\" y=\"" << px(box.y1 + 16)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"10\">"
        << static_cast<long long>(x_max) << "</text>\n";
    out << "  <text x=\"" << px(box.x0 - 8) << "\" y=\"" << px(box.y1 + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"10\">"
        << px(y_min) << "</text>\n";
    out << "  <text x=\"" << px(box.x0 - 8) << "\" y=\"" << px(box.y0 + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"10\">"
        << px(y_max) << "</text>\n";
}

double map_x(double v, double lo, double hi, const Box& box) {
    if (hi == lo) return (box.x0 + box.x1) / 2;
    return box.x0 + (v - lo) / (hi - lo) * (box.x1 - box.x0);
}

double map_y(double v, double lo, double hi, const Box& box) {
    if (hi == lo) return (box.y0 + box.y1) / 2;
    return box.y1 - (v - lo) / (hi - lo) * (box.y1 - box.y0);
}

void write_polyline(std::ostream& out, const std::vector<double>& xs,
                    const std::vector<double>& ys, const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        out << px(xs[i]) << ',' << px(ys[i]);
    }
    out << "\"/>\n";
}

} // namespace

void emit_svg_plot(const CorrelationSeries& series, std::string_view title,
                   const std::filesystem::path& path) {
    const Box box;
    auto out = open_svg(path);
    write_header(out, title);
    write_axes(out, box, "lag", "ccf", 0,
               static_cast<double>(series.size() - 1), -1.0, 1.0);

    std::vector<double> xs(series.size()), ys(series.size());
    for (std::size_t k = 0; k < series.size(); ++k) {
        xs[k] = map_x(static_cast<double>(k), 0,
                      static_cast<double>(series.size() - 1), box);
        ys[k] = map_y(series[k], -1.0, 1.0, box);
    }
    // Zero-correlation guide line.
    const double y_zero = map_y(0.0, -1.0, 1.0, box);
    out << "  <line x1=\"" << px(box.x0) << "\" y1=\"" << px(y_zero)
        << "\" x2=\"" << px(box.x1) << "\" y2=\"" << px(y_zero)
        << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" "
           "stroke-dasharray=\"4 4\"/>\n";
    write_polyline(out, xs, ys, "#1f6fb2");
    out << "</svg>\n";
    if (!out.flush())
        throw std::invalid_argument("cannot write " + path.string());
}

void emit_svg_plot(std::span<const ComparisonRow> rows, std::string_view title,
                   const std::filesystem::path& path) {
    if (rows.empty())
        throw std::invalid_argument("svg plot needs at least one row");
    const Box box;
    auto out = open_svg(path);
    write_header(out, title);

    double x_min = static_cast<double>(rows.front().length);
    double x_max = x_min;
    for (const ComparisonRow& row : rows) {
        x_min = std::min(x_min, static_cast<double>(row.length));
        x_max = std::max(x_max, static_cast<double>(row.length));
    }
    write_axes(out, box, "fragment length", "peak ccf", x_min, x_max, 0.0, 1.0);

    struct Column {
        const char* color;
        const char* label;
        double ComparisonRow::* member;
    };
    const Column columns[] = {
        {"#1f6fb2", "gh", &ComparisonRow::gh_peak},
        {"#b23a1f", "pn-same", &ComparisonRow::pn_same_peak},
        {"#2e8b57", "pn-diff", &ComparisonRow::pn_diff_peak},
    };
    double legend_y = box.y0 + 16;
    for (const Column& column : columns) {
        std::vector<double> xs, ys;
        xs.reserve(rows.size());
        ys.reserve(rows.size());
        for (const ComparisonRow& row : rows) {
            xs.push_back(map_x(static_cast<double>(row.length), x_min, x_max,
                               box));
            ys.push_back(map_y(row.*(column.member), 0.0, 1.0, box));
        }
        write_polyline(out, xs, ys, column.color);
        out << "  <text x=\"" << px(box.x0 + 12) << "\" y=\"" << px(legend_y)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << column.color << "\">" << column.label << "</text>\n";
        legend_y += 16;
    }
    out << "</svg>\n";
    if (!out.flush())
        throw std::invalid_argument("cannot write " + path.string());
}

} // namespace ghseq
