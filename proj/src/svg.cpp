#include "ridgepath/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "ridgepath/numio.hpp"

namespace ridgepath {

namespace {

const char* kPalette[8] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                           "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

constexpr double kWidth = 720, kHeight = 480;
constexpr double kLeft = 64, kRight = 590, kTop = 36, kBottom = 430;

std::string esc(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

void write_trace_svg(const TraceSeries& t, TraceKind kind,
                     const std::string& path,
                     const std::vector<std::string>& names) {
    if (t.m_grid.empty() || t.p < 1)
        throw std::invalid_argument("write_trace_svg: empty series");
    const Eigen::MatrixXd& data = (kind == TraceKind::coef) ? t.coef : t.risk;
    const char* value_label = (kind == TraceKind::coef) ? "coefficient"
                                                        : "relative risk";

    double x_lo = t.m_grid.front();
    double x_hi = t.m_grid.back();
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    double y_lo = data.minCoeff();
    double y_hi = data.maxCoeff();
    if (y_hi <= y_lo) {
        y_lo -= 1.0;
        y_hi += 1.0;
    } else {
        double pad = 0.05 * (y_hi - y_lo);
        y_lo -= pad;
        y_hi += pad;
    }

    auto px = [&](double m) {
        return kLeft + (m - x_lo) / (x_hi - x_lo) * (kRight - kLeft);
    };
    auto py = [&](double v) {
        return kBottom - (v - y_lo) / (y_hi - y_lo) * (kBottom - kTop);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
           "height=\"480\" viewBox=\"0 0 720 480\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"720\" height=\"480\" "
           "fill=\"#ffffff\"/>\n";
    out << "<rect x=\"" << format_fixed(kLeft, 2) << "\" y=\""
        << format_fixed(kTop, 2) << "\" width=\""
        << format_fixed(kRight - kLeft, 2) << "\" height=\""
        << format_fixed(kBottom - kTop, 2)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    // Ticks: 5 along each axis.
    for (int i = 0; i <= 4; ++i) {
        double fx = x_lo + (x_hi - x_lo) * i / 4.0;
        double X = px(fx);
        out << "<line x1=\"" << format_fixed(X, 2) << "\" y1=\""
            << format_fixed(kBottom, 2) << "\" x2=\"" << format_fixed(X, 2)
            << "\" y2=\"" << format_fixed(kBottom + 5, 2)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << format_fixed(X, 2) << "\" y=\""
            << format_fixed(kBottom + 18, 2)
            << "\" font-family=\"monospace\" font-size=\"11\" "
               "text-anchor=\"middle\" fill=\"#333333\">"
            << esc(format_general(fx, 4)) << "</text>\n";

        double fy = y_lo + (y_hi - y_lo) * i / 4.0;
        double Y = py(fy);
        out << "<line x1=\"" << format_fixed(kLeft - 5, 2) << "\" y1=\""
            << format_fixed(Y, 2) << "\" x2=\"" << format_fixed(kLeft, 2)
            << "\" y2=\"" << format_fixed(Y, 2)
            << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << format_fixed(kLeft - 8, 2) << "\" y=\""
            << format_fixed(Y + 4, 2)
            << "\" font-family=\"monospace\" font-size=\"11\" "
               "text-anchor=\"end\" fill=\"#333333\">"
            << esc(format_general(fy, 4)) << "</text>\n";
    }

    // Axis labels.
    out << "<text x=\"" << format_fixed((kLeft + kRight) / 2, 2) << "\" y=\""
        << format_fixed(kHeight - 12, 2)
        << "\" font-family=\"monospace\" font-size=\"13\" "
           "text-anchor=\"middle\" fill=\"#000000\">m</text>\n";
    out << "<text x=\"16\" y=\"" << format_fixed((kTop + kBottom) / 2, 2)
        << "\" font-family=\"monospace\" font-size=\"13\" "
           "text-anchor=\"middle\" fill=\"#000000\" transform=\"rotate(-90 16 "
        << format_fixed((kTop + kBottom) / 2, 2) << ")\">" << value_label
        << "</text>\n";

    // Knot marker.
    if (std::isfinite(t.m_star) && t.m_star >= x_lo && t.m_star <= x_hi) {
        double X = px(t.m_star);
        out << "<line x1=\"" << format_fixed(X, 2) << "\" y1=\""
            << format_fixed(kTop, 2) << "\" x2=\"" << format_fixed(X, 2)
            << "\" y2=\"" << format_fixed(kBottom, 2)
            << "\" stroke=\"#555555\" stroke-width=\"1\" "
               "stroke-dasharray=\"4 3\"/>\n";
        out << "<text x=\"" << format_fixed(X + 4, 2) << "\" y=\""
            << format_fixed(kTop + 12, 2)
            << "\" font-family=\"monospace\" font-size=\"11\" "
               "fill=\"#555555\">m*</text>\n";
    }

    // One polyline per variable.
    for (int j = 0; j < t.p; ++j) {
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[j % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t r = 0; r < t.m_grid.size(); ++r) {
            if (r > 0) out << " ";
            out << format_fixed(px(t.m_grid[r]), 2) << ","
                << format_fixed(py(data(static_cast<Eigen::Index>(r), j)), 2);
        }
        out << "\"/>\n";
    }

    // Legend.
    for (int j = 0; j < t.p; ++j) {
        std::string label = (static_cast<int>(names.size()) == t.p)
                                ? names[static_cast<std::size_t>(j)]
                                : "v" + std::to_string(j + 1);
        double Y = kTop + 10 + 16.0 * j;
        out << "<line x1=\"" << format_fixed(kRight + 8, 2) << "\" y1=\""
            << format_fixed(Y, 2) << "\" x2=\"" << format_fixed(kRight + 28, 2)
            << "\" y2=\"" << format_fixed(Y, 2) << "\" stroke=\""
            << kPalette[j % 8] << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << format_fixed(kRight + 33, 2) << "\" y=\""
            << format_fixed(Y + 4, 2)
            << "\" font-family=\"monospace\" font-size=\"11\" "
               "fill=\"#333333\">"
            << esc(label) << "</text>\n";
    }

    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace ridgepath
