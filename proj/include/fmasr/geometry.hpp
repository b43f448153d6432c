#pragma once

#include <cmath>
#include <utility>

namespace fmasr {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double length(Vec2 a) { return std::hypot(a.x, a.y); }
/** Counter-clockwise quarter turn. */
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline Vec2 rotate(Vec2 u, double theta) {
    double ct = std::cos(theta), st = std::sin(theta);
    return {ct * u.x - st * u.y, st * u.x + ct * u.y};
}

/** Symmetric 2x2 matrix [[a,b],[b,c]]. */
struct SymMat2 {
    double a = 1.0;
    double b = 0.0;
    double c = 1.0;

    Vec2 apply(Vec2 u) const { return {a * u.x + b * u.y, b * u.x + c * u.y}; }
    double quad(Vec2 u) const { return dot(u, apply(u)); }
    double det() const { return a * c - b * b; }
    double trace() const { return a + c; }
    bool positive_definite() const { return a > 0.0 && det() > 0.0; }
    SymMat2 inverse() const {
        double d = det();
        return {c / d, -b / d, a / d};
    }

    /** Eigenvalues in ascending order. */
    std::pair<double, double> eigenvalues() const {
        double mid = 0.5 * trace();
        double disc = std::sqrt(std::fmax(mid * mid - det(), 0.0));
        return {mid - disc, mid + disc};
    }

    /** Unit eigenvector for the smallest eigenvalue. */
    Vec2 eigenvector_min() const {
        double lam = eigenvalues().first;
        // pick the better-conditioned row of (M - lam I)
        Vec2 v1{-b, a - lam};
        Vec2 v2{c - lam, -b};
        Vec2 v = dot(v1, v1) >= dot(v2, v2) ? v1 : v2;
        double len = length(v);
        if (len == 0.0) return {1.0, 0.0};  // multiple of identity
        return {v.x / len, v.y / len};
    }

    static SymMat2 identity() { return {1.0, 0.0, 1.0}; }
    static SymMat2 diagonal(double a, double c) { return {a, 0.0, c}; }
};

/** Closed axis-aligned rectangle. */
struct Rect {
    double xmin = 0.0, ymin = 0.0, xmax = 0.0, ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    bool contains(Vec2 p, double tol = 0.0) const {
        return p.x >= xmin - tol && p.x <= xmax + tol && p.y >= ymin - tol && p.y <= ymax + tol;
    }
};

}  // namespace fmasr
