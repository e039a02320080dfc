#pragma once

#include <cstddef>
#include <vector>

namespace mcflow {

// Monotone piecewise cubic Hermite interpolant (Fritsch-Carlson slopes).
class Pchip {
public:
    Pchip() = default;
    Pchip(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;
    double derivative(double t) const;

    // Smallest t with f(t) = value, for nondecreasing data. Clamps outside the range.
    double inverse(double value) const;

    bool empty() const { return x_.empty(); }
    double front() const { return x_.front(); }
    double back() const { return x_.back(); }
    const std::vector<double>& knots() const { return x_; }
    const std::vector<double>& values() const { return y_; }

private:
    std::size_t locate(double t) const;
    double eval_on(std::size_t k, double t) const;
    double deriv_on(std::size_t k, double t) const;

    std::vector<double> x_, y_, d_;
};

// Same values as Pchip(x, y)(t) and Pchip(x, y).inverse(value), built only on the cells around
// the query (cheap for repeated single lookups on changing data).
double pchip_eval_at(const std::vector<double>& x, const std::vector<double>& y, double t);
double pchip_inverse_at(const std::vector<double>& x, const std::vector<double>& y, double value);

// Linear interpolation on sorted abscissae, clamped at the ends.
double lerp_table(const std::vector<double>& x, const std::vector<double>& y, double t);

} // namespace mcflow
