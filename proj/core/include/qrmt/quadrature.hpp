#pragma once

// Gauss-Legendre nodes/weights (Newton iteration on Legendre polynomials)
// and small adaptive helpers used by the quadrature oracles.

#include <cmath>
#include <functional>
#include <vector>

namespace qrmt {

struct GLRule {
    std::vector<double> x;  // nodes on (a, b)
    std::vector<double> w;  // weights
};

// n-point Gauss-Legendre rule on [a, b].
GLRule gauss_legendre(int n, double a, double b);

inline double gl_integrate(const std::function<double(double)>& f, int n,
                           double a, double b) {
    GLRule r = gauss_legendre(n, a, b);
    double s = 0;
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(r.x[i]);
    return s;
}

// Composite GL over a partition of [a, b] into m panels.
double gl_integrate_panels(const std::function<double(double)>& f, int n,
                           double a, double b, int m);

}  // namespace qrmt
