#include "nwsp/rng.hpp"

#include <cmath>

namespace nwsp {

GeometricParam ball_radius_param(int global_n, Weight diameter, int p_numerator) {
    if (global_n < 2) global_n = 2;
    if (diameter < 1) throw InvalidInput("ball_radius_param requires D >= 1");
    constexpr Weight kScale = 1 << 16;
    double lg = std::log2(static_cast<double>(global_n));
    GeometricParam p;
    p.num = static_cast<Weight>(std::llround(static_cast<double>(p_numerator) * lg *
                                             static_cast<double>(kScale)));
    if (p.num < 1) p.num = 1;
    if (diameter > kArithmeticGuard / kScale)
        throw OverflowError("ball_radius_param: diameter too large");
    p.den = diameter * kScale;
    return p;
}

Weight sample_geometric(Rng& rng, const GeometricParam& param, Weight r_max) {
    if (param.num <= 0 || param.den <= 0 || r_max < 1)
        throw InvalidInput("sample_geometric: bad parameters");
    double p = param.p();
    double u = rng.next_unit();  // (0, 1]
    if (p >= 1.0) return 1;
    // X = floor(ln(V) / ln(1-p)) + 1 with V = 1 - U uniform in (0, 1].
    double x = std::floor(std::log(u) / std::log1p(-p)) + 1.0;
    if (x < 1.0) x = 1.0;
    if (x >= static_cast<double>(r_max)) return r_max;
    return static_cast<Weight>(x);
}

}  // namespace nwsp
