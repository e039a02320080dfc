#include "mcflow/interp.hpp"

#include <algorithm>
#include <cmath>

#include "mcflow/errors.hpp"

namespace mcflow {

namespace {

int sign(double v) { return (v > 0) - (v < 0); }

double end_slope(double h0, double h1, double m0, double m1)
{
    double d = ((2.0 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    if (sign(d) != sign(m0))
        d = 0.0;
    else if (sign(m0) != sign(m1) && std::abs(d) > std::abs(3.0 * m0))
        d = 3.0 * m0;
    return d;
}

} // namespace

Pchip::Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y))
{
    const std::size_t n = x_.size();
    require(n >= 2 && y_.size() == n, ErrorKind::invalid_parameter, "pchip needs >= 2 matching samples");
    for (std::size_t i = 1; i < n; ++i)
        require(x_[i] > x_[i - 1], ErrorKind::invalid_parameter, "pchip abscissae must increase");
    d_.assign(n, 0.0);
    std::vector<double> h(n - 1), m(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        m[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    if (n == 2) {
        d_[0] = d_[1] = m[0];
        return;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (m[k - 1] == 0.0 || m[k] == 0.0 || sign(m[k - 1]) != sign(m[k])) continue;
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        d_[k] = (w1 + w2) / (w1 / m[k - 1] + w2 / m[k]);
    }
    d_[0] = end_slope(h[0], h[1], m[0], m[1]);
    d_[n - 1] = end_slope(h[n - 2], h[n - 3], m[n - 2], m[n - 3]);
}

std::size_t Pchip::locate(double t) const
{
    if (t <= x_.front()) return 0;
    if (t >= x_.back()) return x_.size() - 2;
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double Pchip::eval_on(std::size_t k, double t) const
{
    const double h = x_[k + 1] - x_[k];
    const double s = (t - x_[k]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
    return h00 * y_[k] + h10 * h * d_[k] + h01 * y_[k + 1] + h11 * h * d_[k + 1];
}

double Pchip::deriv_on(std::size_t k, double t) const
{
    const double h = x_[k + 1] - x_[k];
    const double s = (t - x_[k]) / h;
    const double s2 = s * s;
    const double d00 = 6 * s2 - 6 * s, d10 = 3 * s2 - 4 * s + 1;
    const double d01 = -6 * s2 + 6 * s, d11 = 3 * s2 - 2 * s;
    return (d00 * y_[k] + d01 * y_[k + 1]) / h + d10 * d_[k] + d11 * d_[k + 1];
}

double Pchip::operator()(double t) const
{
    if (t <= x_.front()) return y_.front() + d_.front() * (t - x_.front());
    if (t >= x_.back()) return y_.back() + d_.back() * (t - x_.back());
    return eval_on(locate(t), t);
}

double Pchip::derivative(double t) const
{
    if (t <= x_.front()) return d_.front();
    if (t >= x_.back()) return d_.back();
    return deriv_on(locate(t), t);
}

double Pchip::inverse(double value) const
{
    if (value <= y_.front()) return x_.front();
    if (value >= y_.back()) return x_.back();
    auto it = std::lower_bound(y_.begin(), y_.end(), value);
    std::size_t k = static_cast<std::size_t>(it - y_.begin());
    if (y_[k] == value) return x_[k];
    k -= 1;
    double a = x_[k], b = x_[k + 1];
    double fa = y_[k] - value;
    double t = a + (b - a) * (value - y_[k]) / (y_[k + 1] - y_[k]);
    for (int it_count = 0; it_count < 100; ++it_count) {
        const double f = eval_on(k, t) - value;
        if (f == 0.0) return t;
        if ((f < 0) == (fa < 0)) {
            a = t;
            fa = f;
        } else {
            b = t;
        }
        const double df = deriv_on(k, t);
        double next = df > 0 ? t - f / df : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t)) || b - a <= 1e-15 * std::max(1.0, std::abs(t)))
            return next;
        t = next;
    }
    return t;
}

namespace {

Pchip window_around(const std::vector<double>& x, const std::vector<double>& y, std::size_t k)
{
    const std::size_t n = x.size();
    if (n <= 6) return Pchip(x, y);
    std::size_t lo = k >= 2 ? k - 2 : 0, hi = std::min(n - 1, k + 3);
    if (hi - lo < 3) {
        if (lo == 0) hi = 3;
        else lo = hi - 3;
    }
    return Pchip(std::vector<double>(x.begin() + lo, x.begin() + hi + 1),
                 std::vector<double>(y.begin() + lo, y.begin() + hi + 1));
}

} // namespace

double pchip_eval_at(const std::vector<double>& x, const std::vector<double>& y, double t)
{
    require(x.size() >= 2 && y.size() == x.size(), ErrorKind::invalid_parameter, "pchip needs >= 2 matching samples");
    std::size_t k = 0;
    if (t >= x.back()) k = x.size() - 2;
    else if (t > x.front()) k = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), t) - x.begin()) - 1;
    return window_around(x, y, k)(t);
}

double pchip_inverse_at(const std::vector<double>& x, const std::vector<double>& y, double value)
{
    require(x.size() >= 2 && y.size() == x.size(), ErrorKind::invalid_parameter, "pchip needs >= 2 matching samples");
    if (value <= y.front()) return x.front();
    if (value >= y.back()) return x.back();
    const std::size_t k = static_cast<std::size_t>(std::lower_bound(y.begin(), y.end(), value) - y.begin());
    return window_around(x, y, k > 0 ? k - 1 : 0).inverse(value);
}

double lerp_table(const std::vector<double>& x, const std::vector<double>& y, double t)
{
    if (t <= x.front()) return y.front();
    if (t >= x.back()) return y.back();
    auto it = std::upper_bound(x.begin(), x.end(), t);
    const std::size_t k = static_cast<std::size_t>(it - x.begin()) - 1;
    const double w = (t - x[k]) / (x[k + 1] - x[k]);
    return (1 - w) * y[k] + w * y[k + 1];
}

} // namespace mcflow
