#include "ballbodies/unit_ball.hpp"

#include <cmath>

namespace bb {

double unit_ball_volume(int d) {
    if (d < 0) throw std::invalid_argument("unit_ball_volume: negative dimension");
    // Closed form; std::tgamma is accurate to ~1 ulp for half-integer args.
    return std::pow(M_PI, 0.5 * d) / std::tgamma(1.0 + 0.5 * d);
}

double sphere_surface(int d) {
    if (d < 1) throw std::invalid_argument("sphere_surface: dimension must be >= 1");
    return d * unit_ball_volume(d);
}

static double binomial(int n, int k) {
    // exact for the small n used here
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double intrinsic_ball_constant(int d, int k) {
    if (d < 0 || k < 0 || k > d) throw std::invalid_argument("intrinsic_ball_constant: need 0 <= k <= d");
    if (k == 0) return 1.0;
    return binomial(d, k) * unit_ball_volume(d) / unit_ball_volume(d - k);
}

IntrinsicProfile ball_profile(int d, double R) {
    if (R < 0.0) throw std::invalid_argument("ball_profile: negative radius");
    IntrinsicProfile p;
    p.dim = d;
    for (int k = 0; k <= d; ++k)
        p.values[k] = {intrinsic_ball_constant(d, k) * std::pow(R, k), Provenance::exact, 0.0};
    return p;
}

double steiner_eval(const IntrinsicProfile& profile, double eps) {
    if (eps < 0.0) throw std::invalid_argument("steiner_eval: negative inflation");
    const int d = profile.dim;
    double sum = unit_ball_volume(d) * std::pow(eps, d);  // i = 0 term, V_0 = 1
    for (int i = 1; i <= d; ++i)
        sum += unit_ball_volume(d - i) * profile.at(i) * std::pow(eps, d - i);
    return sum;
}

}  // namespace bb
