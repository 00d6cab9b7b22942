#pragma once

// SVG 1.1 figure: boundary ellipse, dashed caustic, the four light-like
// common tangents x +- y = +-sqrt(a+b) in gray, and the trajectory polyline.

#include <pellipse/dynamics.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace pellipse::svg {

struct Viewport {
    double size = 600;
    double extent = 1; // world half-width shown

    double px(double x) const { return size / 2 + x * scale(); }
    double py(double y) const { return size / 2 - y * scale(); }
    double scale() const { return size / (2 * extent); }
};

inline Viewport viewport_for(double a, double b, double size = 600) {
    Viewport v;
    v.size = size;
    v.extent = 1.25 * std::sqrt(a + b);
    return v;
}

inline std::string fmt(double x) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << x;
    return os.str();
}

inline std::string polyline(const std::vector<MVec2<double>>& pts, const Viewport& v, const std::string& style) {
    std::string s = "<polyline fill=\"none\" " + style + " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += fmt(v.px(pts[i].x)) + ',' + fmt(v.py(pts[i].y));
    }
    return s + "\"/>\n";
}

/// Confocal conic x^2/(a-g) + y^2/(b+g) = 1 as SVG elements.
inline std::string conic(double a, double b, double g, const Viewport& v, const std::string& style) {
    const double A = a - g, B = b + g;
    if (A > 0 && B > 0)
        return "<ellipse cx=\"" + fmt(v.px(0)) + "\" cy=\"" + fmt(v.py(0)) + "\" rx=\"" + fmt(std::sqrt(A) * v.scale()) +
               "\" ry=\"" + fmt(std::sqrt(B) * v.scale()) + "\" fill=\"none\" " + style + "/>\n";
    if (A == 0 || B == 0) return {};
    // hyperbola: two branches, parametrized by cosh/sinh up to the view edge
    const bool x_branches = A > 0;
    const double p = std::sqrt(std::fabs(A)), q = std::sqrt(std::fabs(B));
    const double tmax = std::acosh(std::max(1.0, 1.5 * v.extent / std::min(p, q)) + 1);
    std::string out;
    for (double side : {1.0, -1.0}) {
        std::vector<MVec2<double>> pts;
        for (int i = 0; i <= 200; ++i) {
            double t = -tmax + 2 * tmax * i / 200;
            if (x_branches)
                pts.push_back({side * p * std::cosh(t), q * std::sinh(t)});
            else
                pts.push_back({p * std::sinh(t), side * q * std::cosh(t)});
        }
        out += polyline(pts, v, style);
    }
    return out;
}

template <class T>
std::string figure(const Trajectory<T>& tr, double size = 600) {
    const double a = to_double(tr.a), b = to_double(tr.b);
    const Viewport v = viewport_for(a, b, size);
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(size) << "\" height=\""
       << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
    os << "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
       << "\"/></clipPath></defs>\n";
    os << "<g clip-path=\"url(#view)\">\n";
    const double r = std::sqrt(a + b), e = v.extent;
    for (double sx : {1.0, -1.0})
        for (double c : {r, -r}) {
            // sx x + y = c  (lines with slopes -+1)
            MVec2<double> p0{-e, c + sx * e}, p1{e, c - sx * e};
            os << "<line x1=\"" << fmt(v.px(p0.x)) << "\" y1=\"" << fmt(v.py(p0.y)) << "\" x2=\"" << fmt(v.px(p1.x))
               << "\" y2=\"" << fmt(v.py(p1.y)) << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
        }
    os << "<ellipse cx=\"" << fmt(v.px(0)) << "\" cy=\"" << fmt(v.py(0)) << "\" rx=\"" << fmt(std::sqrt(a) * v.scale())
       << "\" ry=\"" << fmt(std::sqrt(b) * v.scale()) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
    if (tr.caustic_gamma.is_finite())
        os << conic(a, b, to_double(tr.caustic_gamma.value), v,
                    "stroke=\"steelblue\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");
    std::vector<MVec2<double>> pts;
    for (const auto& P : tr.vertices) pts.push_back(to_double(P));
    os << polyline(pts, v, "stroke=\"firebrick\" stroke-width=\"1.5\"");
    for (const auto& P : pts)
        os << "<circle cx=\"" << fmt(v.px(P.x)) << "\" cy=\"" << fmt(v.py(P.y)) << "\" r=\"3\" fill=\"firebrick\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace pellipse::svg
