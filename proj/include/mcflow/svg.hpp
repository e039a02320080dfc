#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcflow {

// Minimal line plot: polylines, a frame with ticks, and a legend. Non-finite points break a path.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel);

    void add(std::string label, std::vector<double> x, std::vector<double> y, bool dashed = false);
    void equal_aspect(bool on) { equal_ = on; }
    bool empty() const { return series_.empty(); }

    void write(std::ostream& os, int width = 640, int height = 480) const;
    void write_file(const std::string& path, int width = 640, int height = 480) const;

private:
    struct Series {
        std::string label;
        std::vector<double> x, y;
        bool dashed;
    };
    std::string title_, xlabel_, ylabel_;
    std::vector<Series> series_;
    bool equal_ = false;
};

} // namespace mcflow
