#include "fmasr/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace fmasr {

double norm_eval(const OffsetNorm& F, Vec2 u) {
    Vec2 Mu = F.M.apply(u);
    return std::sqrt(dot(u, Mu)) - dot(F.omega, Mu);
}

Vec2 norm_grad(const OffsetNorm& F, Vec2 u) {
    Vec2 Mu = F.M.apply(u);
    double q = std::sqrt(dot(u, Mu));
    if (q <= 0.0) throw std::invalid_argument("gradient undefined at origin");
    Vec2 Mo = F.M.apply(F.omega);
    return {Mu.x / q - Mo.x, Mu.y / q - Mo.y};
}

OffsetNorm dual_norm(const OffsetNorm& F) {
    Vec2 Mo = F.M.apply(F.omega);
    double delta = 1.0 - dot(F.omega, Mo);
    if (delta <= 0.0) throw std::invalid_argument("not a norm");
    SymMat2 Minv = F.M.inverse();
    double d2 = delta * delta;
    SymMat2 Md{(F.omega.x * F.omega.x + delta * Minv.a) / d2,
               (F.omega.x * F.omega.y + delta * Minv.b) / d2,
               (F.omega.y * F.omega.y + delta * Minv.c) / d2};
    Vec2 w = Md.inverse().apply(F.omega);
    return {Md, {-w.x / delta, -w.y / delta}};
}

bool is_acute(const OffsetNorm& F, Vec2 u, Vec2 v) {
    return dot(u, norm_grad(F, v)) >= 0.0 && dot(v, norm_grad(F, u)) >= 0.0;
}

double golden_section(const std::function<double(double)>& f, double a, double b,
                      bool maximize, int iterations) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iterations; ++i) {
        bool keep_left = maximize ? f1 > f2 : f1 < f2;
        if (keep_left) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

double anisotropy_ratio(const OffsetNorm& F) {
    constexpr int samples = 1024;
    const double step = 2.0 * M_PI / samples;
    auto value = [&F](double t) { return norm_eval(F, {std::cos(t), std::sin(t)}); };
    int imax = 0, imin = 0;
    double vmax = -1.0, vmin = 0.0;
    for (int k = 0; k < samples; ++k) {
        double v = value(step * k);
        if (k == 0 || v > vmax) {
            vmax = v;
            imax = k;
        }
        if (k == 0 || v < vmin) {
            vmin = v;
            imin = k;
        }
    }
    double tmax = golden_section(value, step * (imax - 1), step * (imax + 1), true, 64);
    double tmin = golden_section(value, step * (imin - 1), step * (imin + 1), false, 64);
    return value(tmax) / value(tmin);
}

OffsetNorm rotate_norm(const OffsetNorm& F, double theta) {
    double ct = std::cos(theta), st = std::sin(theta);
    double a = F.M.a, b = F.M.b, c = F.M.c;
    SymMat2 Mr{a * ct * ct - 2 * b * ct * st + c * st * st,
               (a - c) * ct * st + b * (ct * ct - st * st),
               a * st * st + 2 * b * ct * st + c * ct * ct};
    return {Mr, {ct * F.omega.x - st * F.omega.y, st * F.omega.x + ct * F.omega.y}};
}

}  // namespace fmasr
