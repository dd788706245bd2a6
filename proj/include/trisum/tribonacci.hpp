#pragma once

/// Exact, bidirectional evaluation of Tribonacci numbers T_m
/// (T_m = T_{m-1} + T_{m-2} + T_{m-3}, T_0 = 0, T_1 = T_2 = 1, extended to
/// all integers), the Tribonacci-Lucas power sums K_t, and the decimation
/// coefficients lambda1(t), lambda2(t), lambda3(t) that express T at
/// arithmetic-progression indices as a third-order recurrence in the stride.
///
/// All values are exact GMP integers; nothing here ever rounds.

#include "trisum/rational.hpp"

namespace trisum {

// Decimation coefficients for stride t:
//   T_{tm+r} = lambda1 T_{t(m-1)+r} + lambda2 T_{t(m-2)+r} + lambda3 T_{t(m-3)+r}.
// lambda3 is 1 for every t because the roots of x^3 - x^2 - x - 1 multiply to 1.
struct LambdaTriple {
    Int lambda1;
    Int lambda2;
    Int lambda3;
    long t = 0;
};

// Rational bracket around the dominant real root of x^3 - x^2 - x - 1.
struct RootApprox {
    Rat alpha_lo;
    Rat alpha_hi;
};

// Iterative-path index guard. Defaults to 10^7; the environment variable
// TRISUM_MAX_INDEX (read once, at first use) or set_index_guard overrides it.
long index_guard();
void set_index_guard(long limit);

// Logarithmic-path guard for trib_fast.
constexpr long kFastIndexGuard = 1000000000000000000L; // 10^18

// T_m by the defining recurrence, forward or backward. SizeError beyond guard.
Int trib(long m);

// T_m via companion-matrix power, O(log |m|) big-integer multiplications.
// Negative m uses the exact integer inverse of the companion matrix
// (determinant 1), so the path stays integral throughout.
Int trib_fast(long m);

// 2 T_{m-1} - T_{m-4}: the two-term form of the recurrence. Equals trib(m)
// for every integer m.
Int trib_alt_recurrence_check(long m);

// T_{m-1}^2 - T_{m-2} T_m. Equals trib(-m) for every integer m.
Int trib_negative_identity(long m);

// T_r T_{m-2} + (T_{r-1} + T_r) T_{m-1} + T_{r+1} T_m: the addition form.
// Equals trib(m + r) for all integers m, r.
Int trib_addition(long m, long r);

// K_t = alpha^t + beta^t + gamma^t, computed by the integer recurrence
// K_t = K_{t-1} + K_{t-2} + K_{t-3} with K_0 = 3, K_1 = 1, K_2 = 3,
// extended backward the same way.
Int trib_lucas(long t);

// lambda1 = K_t, lambda2 = -K_{-t} (since the root product is 1), lambda3 = 1.
LambdaTriple lambdas(long t);

// Rational bracket of width <= max_width around alpha ~ 1.839286755214,
// obtained by bisection (sign change maintained across the bracket).
RootApprox alpha_bracket(const Rat& max_width = make_rat(1, 1000000000000L));

// x^3 - x^2 - x - 1 at a rational point.
Rat char_poly_at(const Rat& x);

} // namespace trisum
