#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcflow/curve.hpp"

namespace mcflow {

// ---------------------------------------------------------------- catenoids x = c cosh((y - xi)/c)

double catenoid_x(double c, double xi, double y);
double catenoid_y(double c, double xi, double x);     // upper branch; domain-error for x < c
double catenoid_slope(double c, double x);            // dy/dx on the upper branch

// ---------------------------------------------------------------- shrinking torus

struct ShrinkerProfile {
    Polyline upper;            // rescaled upper half, inner crossing to outer crossing
    double x0_unit = 0.0;      // inner crossing of the unit shrinker (extinct at t = 1)
    double x1_unit = 0.0;      // outer crossing of the unit shrinker
    double scale = 0.0;        // rescaling factor putting the neck at 11/10
    double defect = 0.0;       // |cos theta| at the return to the x-axis
    double alpha = 0.0;        // padded box constant
    double T_prime = 0.0;      // extinction time of the rescaled torus
    Point neck;                // closest point to the axis

    Polyline closed() const;   // full closed polyline (upper half and its mirror)
};

struct ShootOptions {
    double ode_tol = 1e-12;
    double scan_lo = 0.25;
    double scan_hi = 1.0;
    int scan_steps = 30;
    int samples = 801;
    double pad = 1.01;
};

ShrinkerProfile shoot_angenent_torus(double tolerance, const ShootOptions& opt = {});

// Orthogonality defect cos(theta) at the first return to y = 0 for launch point x0.
// Empty when the orbit leaves the half-plane or never returns.
std::optional<double> shooting_defect(double x0, double ode_tol = 1e-12);

BarrierConstants barrier_constants(const ShrinkerProfile& p);

struct SelfSimilarityReport {
    double fraction = 0.0;
    double t = 0.0;
    double max_rel_deviation = 0.0;
    double area_ratio = 0.0;       // A(t)/A(0)
    double area_expected = 0.0;    // 1 - t/T'
    double area_rel_error = 0.0;
};

SelfSimilarityReport torus_self_similarity_check(const ShrinkerProfile& profile, double fraction, int nodes = 400);

void write_torus_cache(const std::string& path, const ShrinkerProfile& p);
ShrinkerProfile read_torus_cache(const std::string& path);
// Reads the cache when it exists and matches the tolerance, otherwise shoots and writes it.
ShrinkerProfile load_or_shoot_torus(const std::string& path, double tolerance);

// ---------------------------------------------------------------- barrier family

struct Barrier {
    enum class Kind { plane, catenoid, torus, sphere, lgraph };

    Kind kind = Kind::plane;
    double height = 0.0;     // plane
    double c = 1.0;          // catenoid neck
    double xi = 0.0;         // catenoid shift
    double lambda = 1.0;     // torus scale relative to the unit shrinker
    Point center;            // sphere center in the half-plane
    double radius = 1.0;     // sphere radius
    double a = 0.0;          // L_a parameter
    Polyline lgraph;         // L_a graph samples (x, y)

    static Barrier plane(double C);
    static Barrier catenoid(double c, double xi);
    static Barrier torus(double lambda);
    static Barrier sphere(Point center, double r0);

    std::string name() const;
};

// Sample a barrier as a polyline in the half-plane x >= 0, clipped to x <= x_max.
Polyline barrier_polyline(const Barrier& b, double x_max, const ShrinkerProfile* torus = nullptr, int n = 400);

// Radius of the shrinking sphere at time t (0 after extinction).
double sphere_radius(double r0, double t);

// ---------------------------------------------------------------- certificates

enum class Certificate { none, torus_enclosure, catenoid_on_top };
const char* to_string(Certificate c);

struct CertificateResult {
    Certificate kind = Certificate::none;
    double parameter = 0.0;      // torus scale (rescaled units) or catenoid neck c
    double deadline = 0.0;       // pinch deadline after certification (torus), 0 otherwise
};

struct CertificateOptions {
    bool scan_scales = true;
    int torus_scales = 48;
    int catenoid_scales = 48;
    double margin = 1e-9;
};

// Torus: some scaled torus lies strictly inside the region under the curve (pinch before its extinction).
// Catenoid: a catenoid c cosh(y/c), c <= neck, lies on top of the curve (neck stays >= c).
CertificateResult certificate_check(const ProfileCurve& curve, const BarrierConstants& constants,
                                    const ShrinkerProfile& torus, const CertificateOptions& opt = {});

bool torus_inside(const ProfileCurve& curve, const ShrinkerProfile& torus, double scale, double margin = 1e-9);
bool catenoid_on_top(const ProfileCurve& curve, double c, double margin = 1e-9);

// Initial L_a data on [0, R]: 0 on [0, a/2], 1 on [a, R], smooth and increasing in between.
double l_a_initial(double a, double x);

} // namespace mcflow
