#include "qrmt/quadrature.hpp"

#include <numbers>

namespace qrmt {

GLRule gauss_legendre(int n, double a, double b) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double wi = 2.0 / ((1.0 - x * x) * pp * pp);
        r.x[i] = x;
        r.w[i] = wi;
        r.x[n - 1 - i] = -x;
        r.w[n - 1 - i] = wi;
    }
    // map [-1, 1] -> [a, b]
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        r.x[i] = mid - half * r.x[i];
        r.w[i] *= half;
    }
    return r;
}

double gl_integrate_panels(const std::function<double(double)>& f, int n,
                           double a, double b, int m) {
    double s = 0;
    for (int p = 0; p < m; ++p) {
        const double pa = a + (b - a) * p / m;
        const double pb = a + (b - a) * (p + 1) / m;
        s += gl_integrate(f, n, pa, pb);
    }
    return s;
}

}  // namespace qrmt
