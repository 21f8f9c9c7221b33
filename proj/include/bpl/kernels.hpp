#pragma once

#include "bpl/vec2.hpp"

namespace bpl::kernels {

// Arguments of the heat-type kernels: spatial offset x and elapsed time t > 0.
struct KernelPoint {
    Vec2 x;
    double t;
};

// Index triple (i,j,k) of the Oseen-type kernels, each in {1,2}.
// The eight combinations collapse to four distinct kernels:
//   K121 = K112,  K212 = K221 = -K111,  K222 = -K112,
// and K122(x1,x2,t) = K111(x2,x1,t) by radial symmetry.
struct OseenIndex {
    int i, j, k;
};

// K(x,t) = e^{-|x|^2/4t} / (4 pi t)
double heat_kernel(const KernelPoint& p);

// Second derivatives of the heat kernel.
//   (1,1): (1/8pi t^2)(x1^2/2t - 1) e^{-|x|^2/4t}
//   (1,2): (x1 x2 / 16 pi t^3)     e^{-|x|^2/4t}
//   (2,2): x1 <-> x2 swap of (1,1); note d11K + d22K = dK/dt.
double heat_kernel_second(int axis_a, int axis_b, const KernelPoint& p);

// Space-time ball integral lim_{eps->0} int_eps^t int_{B_R} d1^2 K dy dtau
// = -(1/2) e^{-R^2/4t}.
double ball_integral_d11(double R, double t);

// (Delta^{-1} K)(x,t) = (1/2pi)( log|x| + (1/2) E1(|x|^2/4t) ), |x| > 0.
double inv_laplace_heat(const KernelPoint& p);

// G(r,t) = (1/r^3)(1 - e^{-r^2/4t}) - (1/4tr) e^{-r^2/4t} >= 0.
// Evaluated as h(s)/r^3 with h(s) = 1-(1+s)e^{-s}, s = r^2/4t; h computed by
// its alternating series for s <= 1/2 to avoid cancellation.
double g_function(double r, double t);

// Closed-form Oseen kernel K_{ijk}(x,t) = d1 dj di^perp dk (Delta^{-1}K).
double oseen_kernel(const OseenIndex& idx, const KernelPoint& p);

// Split K = K* + K^o with K^o the part proportional to G (zero mean on every
// circle, in fact on every half circle) and K* the Gaussian part.
// Returned in polar arguments; star + odd == oseen_kernel at the same point.
struct OseenSplit {
    double star;
    double odd;
};
OseenSplit oseen_split(const OseenIndex& idx, double r, double angle, double t);

// Space-time ball integrals lim_{eps->0} int_eps^t int_{B_R} K_{ijk} dy dtau.
// Closed forms for the kernels above:
//   K112:  +(1/8) e^{-R^2/4t}
//   K211:  -(3/8) e^{-R^2/4t}
//   K111, K122: 0  (zero mean on circles)
// The published statement of this identity carries -1/2 and -3/2; those
// constants are inconsistent with the kernels' own closed forms (the direct
// space-time quadrature below reproduces +1/8 and -3/8 to 1e-8).
double oseen_ball_integral(const OseenIndex& idx, double R, double t);

// --- polar building blocks used by the singular-integral quadratures ---

// Full-circle angular integral including the Jacobian r:
//   r * int_0^{2pi} kernel(r,alpha,t) dalpha.
// For d1^2K and d2^2K this is (r/4t^2)(r^2/4t - 1) e^{-r^2/4t}; for d1d2K, 0.
double heat_second_circle_profile(double r, double t);

// int_0^a of the profile above: -(a^2/8t^2) e^{-a^2/4t}.
double heat_second_profile_radial_integral(double a, double t);

// Same for the Oseen kernels (K112 carries (r/16t^2)(1 - r^2/4t)e^{-r^2/4t},
// K211 is -3 times that, K111/K122 vanish).
double oseen_circle_profile(const OseenIndex& idx, double r, double t);
double oseen_profile_radial_integral(const OseenIndex& idx, double a, double t);

// Multiple-angle coefficients of the kernels on the circle of radius r:
//   K(r,alpha,t) = godd * (3/(pi r)) G(r,t) * {cos4a | sin4a}
//               + e^{-r^2/4t}/(32 pi t^2) * sum_b a_b(r^2/4t) * basis_b(alpha)
// with basis {1, cos2a, sin2a, cos4a, sin4a}. Exposed for the arc quadratures.
struct OseenAngular {
    double g_cos4, g_sin4;          // K^o coefficients of cos4a, sin4a
    double a0_p, a0_q;              // a0   = p + q*beta, beta = r^2/4t
    double a2c_p, a2c_q;            // cos2a
    double a2s_p, a2s_q;            // sin2a
    double a4c_p, a4c_q;            // cos4a
    double a4s_p, a4s_q;            // sin4a
    double sign;                    // overall sign from the symmetry table
};
OseenAngular oseen_angular(const OseenIndex& idx);

}  // namespace bpl::kernels
