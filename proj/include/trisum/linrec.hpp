#pragma once

/// Generic engine for shifted-term linear recurrences with exact rational
/// coefficients:
///
///   X_j = f_1 X_{j-c_1} + f_2 X_{j-c_2} + ... + f_n X_{j-c_n}
///
/// with distinct positive shifts c_m and nonzero rational f_m. Sequences are
/// evaluated in both directions (backward by solving for the most-shifted
/// term), and the module carries the sequence-agnostic summation machinery:
/// weighted partial sums against their closed form, generating functions,
/// and the second/third-order binomial-sum families.

#include <utility>
#include <vector>

#include "trisum/poly.hpp"
#include "trisum/rational.hpp"

namespace trisum {

struct RecurrenceTerm {
    long shift = 0; // c_m, positive
    Rat coeff;      // f_m, nonzero
};

// A validated recurrence plus a seed window of max-shift consecutive values,
// anchored at seed_base, from which every integer index is reachable.
class RecurrenceSpec {
public:
    // Throws DomainError unless: at least one term, shifts distinct and
    // positive, coefficients nonzero, and seeds.size() >= max shift.
    RecurrenceSpec(std::vector<RecurrenceTerm> terms, std::vector<Rat> seeds,
                   long seed_base = 0);

    size_t order() const { return terms_.size(); }
    long max_shift() const { return max_shift_; }
    const std::vector<RecurrenceTerm>& terms() const { return terms_; }
    const std::vector<Rat>& seeds() const { return seeds_; }
    long seed_base() const { return seed_base_; }

    // Coefficient of the most-shifted term (nonzero by construction).
    const Rat& max_shift_coeff() const;

private:
    std::vector<RecurrenceTerm> terms_;
    std::vector<Rat> seeds_;
    long seed_base_ = 0;
    long max_shift_ = 0;
};

// Memoizing bidirectional evaluator over one spec. Values live in one
// contiguous window that grows toward whichever side is queried.
class Sequence {
public:
    explicit Sequence(RecurrenceSpec spec);

    const RecurrenceSpec& spec() const { return spec_; }

    // X_j; extends the window as needed. SizeError beyond the index guard.
    const Rat& at(long j);

private:
    RecurrenceSpec spec_;
    std::vector<Rat> window_; // values at lo_ .. lo_ + window_.size() - 1
    long lo_ = 0;
};

// One-shot X_j.
Rat seq_eval(const RecurrenceSpec& spec, long j);

// The canonical Tribonacci instances of the engine.
RecurrenceSpec tribonacci_spec();          // shifts 1,2,3; f = 1,1,1; seeds 0,1,1
RecurrenceSpec tribonacci_two_term_spec(); // shifts 1,4;   f = 2,-1;  seeds 0,1,1,2

// Brute-force sum_{j=0}^k x^j X_j. This is the oracle every closed form in
// the module is checked against.
Rat partial_sum_direct(Sequence& seq, const Rat& x, long k);
Rat partial_sum_direct(const RecurrenceSpec& spec, const Rat& x, long k);

// Closed form of the same sum:
//
//   sum_{j=0}^k x^j X_j
//     = sum_m x^{c_m} f_m (sum_{j=1}^{c_m} x^{-j} X_{-j}
//                          - sum_{j=k-c_m+1}^{k} x^j X_j)
//       / (1 - sum_m x^{c_m} f_m)
//
// The trailing window j = k-c_m+1 .. k is evaluated literally even when it
// reaches below j = 0. DomainError when x = 0 (negative powers appear);
// SingularError when the denominator vanishes.
Rat partial_sum_closed(Sequence& seq, const Rat& x, long k);
Rat partial_sum_closed(const RecurrenceSpec& spec, const Rat& x, long k);

// Generating function sum_j X_j x^j as a rational function: denominator
// 1 - sum_m f_m x^{c_m} (so den(0) = 1), numerator rearranged to
// nonnegative powers: sum_m f_m sum_{j=1}^{c_m} x^{c_m - j} X_{-j}.
RationalFunction gen_fun(const RecurrenceSpec& spec);

// C(k, j); zero when j < 0 or j > k.
Int binom(long k, long j);

enum class SumVariant2 { V1 = 1, V2 = 2, V3 = 3 };
enum class SumVariant3 { V1 = 1, V2 = 2, V3 = 3, V4 = 4, V5 = 5, V6 = 6 };

// Second-order weighted sums. For X_m = f1 X_{m-a} + f2 X_{m-b}:
//   V1: f2 sum_j X_{m-ka-b+aj} / f1^j   = X_m / f1^k - f1 X_{m-(k+1)a}
//   V2: f1 sum_j X_{m-kb-a+bj} / f2^j   = X_m / f2^k - f2 X_{m-(k+1)b}
//   V3: sum_j X_{m-(b-a)k+a+(b-a)j} / q^j = f1 X_m / q^k + f2 X_{m-(k+1)(b-a)},
//       q = -f2/f1
// Returns (lhs, rhs), both exact. DomainError unless the spec has order 2.
std::pair<Rat, Rat> second_order_weighted_sums(Sequence& seq, SumVariant2 variant,
                                               long m, long k);
std::pair<Rat, Rat> second_order_weighted_sums(const RecurrenceSpec& spec,
                                               SumVariant2 variant, long m, long k);

// Second-order binomial sums for the same recurrence shape:
//   V1: sum_j C(k,j) (f1/f2)^j X_{m-bk+(b-a)j}   = X_m / f2^k
//   V2: sum_j C(k,j) X_{m+(a-b)k+bj} / (-f2)^j   = (-f1/f2)^k X_m
//   V3: sum_j C(k,j) X_{m+(b-a)k+aj} / (-f1)^j   = (-f2/f1)^k X_m
std::pair<Rat, Rat> second_order_binomial_sums(Sequence& seq, SumVariant2 variant,
                                               long m, long k);
std::pair<Rat, Rat> second_order_binomial_sums(const RecurrenceSpec& spec,
                                               SumVariant2 variant, long m, long k);

// Third-order double binomial sums for X_m = f1 X_{m-a} + f2 X_{m-b} + f3 X_{m-c}:
//   V1: sum_{j,s} C(k,j) C(j,s) (f2/f3)^j (f1/f2)^s X_{m-ck+(c-b)j+(b-a)s} = X_m / f3^k
//   V2: ... (f3/f2)^j (f1/f3)^s X_{m-bk+(b-c)j+(c-a)s}                     = X_m / f2^k
//   V3: ... (f3/f1)^j (f2/f3)^s X_{m-ak+(a-c)j+(c-b)s}                     = X_m / f1^k
//   V4: ... (f2/f3)^j (-1/f2)^s X_{m-(c-a)k+(c-b)j+bs}                     = (-f1/f3)^k X_m
//   V5: ... (f1/f3)^j (-1/f1)^s X_{m-(c-b)k+(c-a)j+as}                     = (-f2/f3)^k X_m
//   V6: ... (f1/f2)^j (-1/f1)^s X_{m-(b-c)k+(b-a)j+as}                     = (-f3/f2)^k X_m
// DomainError unless the spec has order 3.
std::pair<Rat, Rat> third_order_double_binomial_sums(Sequence& seq, SumVariant3 variant,
                                                     long m, long k);
std::pair<Rat, Rat> third_order_double_binomial_sums(const RecurrenceSpec& spec,
                                                     SumVariant3 variant, long m, long k);

} // namespace trisum
