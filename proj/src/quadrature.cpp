#include "ballbodies/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace bb {

namespace {

// Kronrod-15 abscissae on [0,1] side of the symmetric rule; even indices are
// the Kronrod extensions, odd indices the embedded Gauss-7 nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
    double integral;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kXgk[i];
        double fv = (i == 7) ? f(c) : f(c - dx) + f(c + dx);
        resk += kWgk[i] * fv;
        if (i % 2 == 1) resg += kWg[i / 2] * fv;
    }
    resk *= h;
    resg *= h;
    return {resk, std::fabs(resk - resg)};
}

void adapt(const std::function<double(double)>& f, double a, double b, double tol,
           int depth, double& acc) {
    GkResult r = gk15(f, a, b);
    if (r.error <= tol || depth >= 48) {
        acc += r.integral;
        return;
    }
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol, depth + 1, acc);
    adapt(f, c, b, 0.5 * tol, depth + 1, acc);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
    if (a == b) return 0.0;
    GkResult first = gk15(f, a, b);
    const double scale = std::max(std::fabs(first.integral), 1e-300);
    const double tol = std::max(rel_tol * scale, 1e-16 * scale);
    if (first.error <= tol) return first.integral;
    double acc = 0.0;
    const double c = 0.5 * (a + b);
    adapt(f, a, c, 0.5 * tol, 1, acc);
    adapt(f, c, b, 0.5 * tol, 1, acc);
    return acc;
}

}  // namespace bb
