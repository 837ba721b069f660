#pragma once

// Frozen reference values. Each was computed outside this code base (numpy,
// scipy or sympy at 30 digits) from the defining formula noted next to it and
// must not be regenerated from the library under test.

namespace oracles {

// KL((1/2, 1/2) || (1/4, 3/4)) = ½ ln(4/3).
inline constexpr double kKlHalfQuarter = 0.14384103622589042;

// Metric extracted from KL on the 2-simplex at p = (1/2, 1/2): 2 (1/p¹ + 1/p²).
inline constexpr double kKlMetricUniform2 = 8.0;

// KL metric at p = (0.2, 0.3, 0.5) on the P-frame {e1 − e2, e2}, i.e. 2 × Fisher-Rao
// with Fisher-Rao δ_jk/p_j + 1/p_3 in chart coordinates.
inline constexpr double kKlMetricP235[2][2] = {{50.0 / 3.0, -20.0 / 3.0}, {-20.0 / 3.0, 32.0 / 3.0}};

// Fisher-Rao on the 3-simplex at the uniform point, chart (p¹, p²) coordinate frame.
inline constexpr double kFisherRaoUniform3Coordinate[2][2] = {{6.0, 3.0}, {3.0, 6.0}};

// Umegaki metric, N = 2, p = (0.75, 0.25): λ and σ diagonal entries
// −2 Tr([ρ₀, τ][τ, ln ρ₀]) = 2 · 0.5 · ln 3, and the classical entry 2 (1/0.75 + 1/0.25).
inline constexpr double kUmegakiLambda2 = 1.0986122886681098;
inline constexpr double kUmegakiClassical2 = 10.666666666666666;

// Umegaki quantum block, N = 3, p = (0.5, 0.3, 0.2), pairs (1,2), (1,3), (2,3);
// numpy evaluation of the trace formula, which equals 2 (p_j − p_μ) ln(p_j / p_μ).
inline constexpr double kUmegakiPairs3[3] = {0.2043302495063963, 0.5497744391244931, 0.08109302162163283};

// su(2) in the ordered basis (λ_12, σ_12, e_1): the only nonzero constants are
// c^0_12 = −√2 and its images under the antisymmetry of c.
inline constexpr double kSu2C012 = -1.4142135623730951;

// Hermitian tensor at ψ = (1, 1)/√2 on the real basis (e1, e2, i e1, i e2).
inline constexpr double kReHHalf[4][4] = {
    {0.5, -0.5, 0.0, 0.0}, {-0.5, 0.5, 0.0, 0.0}, {0.0, 0.0, 0.5, -0.5}, {0.0, 0.0, -0.5, 0.5}};
inline constexpr double kImHHalf[4][4] = {
    {0.0, 0.0, 0.5, -0.5}, {0.0, 0.0, -0.5, 0.5}, {-0.5, 0.5, 0.0, 0.0}, {0.5, -0.5, 0.0, 0.0}};

// Full Hessians in (x0, x1, y0, y1) at x = (0.3, −0.7), y = (1.1, 0.4), sympy.
//   poly:   x0² y1 + 3 x1 y0³ + x0 x1 y0 y1
//   logsum: ln(e^{x0+y0} + e^{x1+y1} + 1)
//   trace:  Tr(A(x)² B(y)), A = x0 M1 + x1 M2, B = y0 N1 + y1 N2,
//           M1 = [[1,2],[0,−1]], M2 = [[0,1],[1,½]], N1 = [[2,0],[1,1]], N2 = [[0,−1],[3,0]]
inline constexpr double kTestX[2] = {0.3, -0.7};
inline constexpr double kTestY[2] = {1.1, 0.4};
inline constexpr double kPolyHessian[4][4] = {
    {0.8, 0.44, -0.28, -0.17}, {0.44, 0.0, 11.01, 0.33}, {-0.28, 11.01, -13.86, -0.21}, {-0.17, 0.33, -0.21, 0.0}};
inline constexpr double kLogSumHessian[4][4] = {
    {0.21013878610751818, -0.08942613293616856, 0.21013878610751818, -0.08942613293616856},
    {-0.08942613293616856, 0.11147834581526622, -0.08942613293616856, 0.11147834581526622},
    {0.21013878610751818, -0.08942613293616856, 0.21013878610751818, -0.08942613293616856},
    {-0.08942613293616856, 0.11147834581526622, -0.08942613293616856, 0.11147834581526622}};
inline constexpr double kTraceHessian[4][4] = {
    {6.6, 7.8, -2.4, -2.1}, {7.8, 9.05, -3.45, -0.5}, {-2.4, -3.45, 0.0, 0.0}, {-2.1, -0.5, 0.0, 0.0}};

}  // namespace oracles
