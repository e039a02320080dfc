#include "mcflow/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "mcflow/errors.hpp"

namespace mcflow {

namespace {

const char* const palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string px(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// 1, 2 or 5 times a power of ten, about n steps across [lo, hi].
double nice_step(double lo, double hi, int n)
{
    const double raw = (hi - lo) / n;
    const double p = std::pow(10.0, std::floor(std::log10(raw)));
    const double m = raw / p;
    return (m < 1.5 ? 1 : m < 3.5 ? 2 : m < 7.5 ? 5 : 10) * p;
}

} // namespace

SvgPlot::SvgPlot(std::string title, std::string xlabel, std::string ylabel)
    : title_(std::move(title)), xlabel_(std::move(xlabel)), ylabel_(std::move(ylabel))
{
}

void SvgPlot::add(std::string label, std::vector<double> x, std::vector<double> y, bool dashed)
{
    require(x.size() == y.size(), ErrorKind::invalid_parameter, "series coordinates differ in length");
    series_.push_back({std::move(label), std::move(x), std::move(y), dashed});
}

void SvgPlot::write(std::ostream& os, int width, int height) const
{
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series_)
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (!std::isfinite(s.x[k]) || !std::isfinite(s.y[k])) continue;
            x0 = std::min(x0, s.x[k]), x1 = std::max(x1, s.x[k]);
            y0 = std::min(y0, s.y[k]), y1 = std::max(y1, s.y[k]);
        }
    if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (x1 - x0 < 1e-300) x0 -= 0.5, x1 += 0.5;
    if (y1 - y0 < 1e-300) y0 -= 0.5, y1 += 0.5;
    const double padx = 0.03 * (x1 - x0), pady = 0.05 * (y1 - y0);
    x0 -= padx, x1 += padx, y0 -= pady, y1 += pady;

    const double left = 70, right = 20, top = 36, bottom = 50;
    double pw = width - left - right, ph = height - top - bottom;
    if (equal_) {
        const double k = std::min(pw / (x1 - x0), ph / (y1 - y0));
        pw = k * (x1 - x0), ph = k * (y1 - y0);
    }
    auto X = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto Y = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << px(left + pw / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape(title_)
       << "</text>\n";
    os << "<rect x=\"" << px(left) << "\" y=\"" << px(top) << "\" width=\"" << px(pw) << "\" height=\"" << px(ph)
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    const double sx = nice_step(x0, x1, 6), sy = nice_step(y0, y1, 6);
    for (double t = std::ceil(x0 / sx) * sx; t <= x1; t += sx) {
        const double v = std::abs(t) < 1e-12 * sx ? 0.0 : t;
        os << "<line x1=\"" << px(X(v)) << "\" y1=\"" << px(top + ph) << "\" x2=\"" << px(X(v)) << "\" y2=\""
           << px(top + ph + 5) << "\" stroke=\"black\"/>";
        os << "<text x=\"" << px(X(v)) << "\" y=\"" << px(top + ph + 18) << "\" text-anchor=\"middle\">" << num(v)
           << "</text>\n";
    }
    for (double t = std::ceil(y0 / sy) * sy; t <= y1; t += sy) {
        const double v = std::abs(t) < 1e-12 * sy ? 0.0 : t;
        os << "<line x1=\"" << px(left - 5) << "\" y1=\"" << px(Y(v)) << "\" x2=\"" << px(left) << "\" y2=\"" << px(Y(v))
           << "\" stroke=\"black\"/>";
        os << "<text x=\"" << px(left - 8) << "\" y=\"" << px(Y(v) + 4) << "\" text-anchor=\"end\">" << num(v)
           << "</text>\n";
    }
    os << "<text x=\"" << px(left + pw / 2) << "\" y=\"" << px(top + ph + 40) << "\" text-anchor=\"middle\">"
       << escape(xlabel_) << "</text>\n";
    os << "<text x=\"16\" y=\"" << px(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << px(top + ph / 2) << ")\">" << escape(ylabel_) << "</text>\n";

    for (std::size_t k = 0; k < series_.size(); ++k) {
        const auto& s = series_[k];
        const char* color = palette[k % (sizeof palette / sizeof *palette)];
        std::string d;
        bool pen = false;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                pen = false;
                continue;
            }
            d += (pen ? " L" : " M") + px(X(s.x[i])) + ',' + px(Y(s.y[i]));
            pen = true;
        }
        if (!d.empty())
            os << "<path d=\"" << d.substr(1) << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\""
               << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
        const double ly = top + 14 + 16 * k;
        os << "<line x1=\"" << px(left + pw - 150) << "\" y1=\"" << px(ly - 4) << "\" x2=\"" << px(left + pw - 125)
           << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\""
           << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>";
        os << "<text x=\"" << px(left + pw - 120) << "\" y=\"" << px(ly) << "\">" << escape(s.label) << "</text>\n";
    }
    os << "</svg>\n";
}

void SvgPlot::write_file(const std::string& path, int width, int height) const
{
    std::ofstream f(path);
    require(bool(f), ErrorKind::io_error, "cannot write " + path);
    write(f, width, height);
}

} // namespace mcflow
