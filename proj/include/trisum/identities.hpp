#pragma once

/// Catalog of the concrete Tribonacci summation identities, each as a paired
/// exact left-side / right-side evaluator, plus a grid-sweep verification
/// engine that reports counterexamples (and logs skipped singular/domain
/// instances instead of failing the sweep).

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trisum/poly.hpp"
#include "trisum/rational.hpp"
#include "trisum/tribonacci.hpp"

namespace trisum {

enum class IdentityId {
    W1,   // sum 2^{-j} T_{m-k-4+j}            = 2 T_{m-k-1} - 2^{-k} T_m
    W2,   // 2 sum (-1)^j T_{m-4k-1+4j}        = (-1)^k T_m + T_{m-4k-4}
    W3,   // sum 2^j T_{m-3k+1+3j}             = 2^{k+1} T_m - T_{m-3k-3}
    WP1,  // sum 2^{-j} T_j                    = 2 T_3 - 2^{-k} T_{k+4}
    WP2,  // sum 2^{-j} T_j                    = 4 - 2^{-k} T_{k+4}  (tail-corrected infinite sum)
    WP3,  // 2 sum (-1)^j T_{4j}               = (-1)^k T_{4k+1} - 1
    WP4,  // sum 2^j T_{3j}                    = 2^{k+1} T_{3k-1}
    AP,   // arithmetic-progression sum, undivided (polynomial-multiplied) form
    APGF, // [x^k] of the progression generating function = T_{tk+r}
    AP1,  // x = 1 instance of AP
    AP1Z, // AP1 at r = 0, negative indices written as squares
    APALT,  // x = -1 instance of AP
    APALTZ, // APALT at r = 0, negative indices written as squares
    J1,   // 2 sum j T_{j+r}    closed form
    J2,   // 2 sum j^2 T_{j+r}  closed form
    J1Z,  // J1 at r = 0
    J2Z,  // J2 at r = 0
    B1,   // sum (-1)^j C(k,j) 2^j T_{m-4k+3j}    = (-1)^k T_m
    B2,   // sum C(k,j) T_{m-3k+4j}               = 2^k T_m
    B3,   // sum (-1)^j C(k,j) 2^{-j} T_{m+3k+j}  = 2^{-k} T_m
    BP1,  // B1 at m = 4k
    BP2,  // B2 at m = 3k
    BP3,  // sum (-1)^j C(k,j) 2^{-j} T_j = 2^{-k} (T_{3k-1}^2 - T_{3k-2} T_{3k})
    D1, D2, D3, D4, D5, D6, // double binomial sums, validity r not in {-17,-4,-1,0}
    DEC,  // decimation: T_{tm+r} = lambda-combination of T_{t(m-i)+r}
    NEG,  // T_{-m} = T_{m-1}^2 - T_{m-2} T_m
    ADD,  // T_{m+r} = T_r T_{m-2} + (T_{r-1}+T_r) T_{m-1} + T_{r+1} T_m
};

// All catalog entries, in a stable order.
const std::vector<IdentityId>& all_identities();

std::string_view identity_name(IdentityId id);
// Throws ParseError for an unknown name.
IdentityId identity_from_name(std::string_view name);

// Which parameters an identity takes.
struct ParamSignature {
    bool m = false, k = false, t = false, r = false, x = false;
};
ParamSignature identity_signature(IdentityId id);

// A (partial) parameter assignment; presence must match the signature.
struct Params {
    std::optional<long> m, k, t, r;
    std::optional<Rat> x;
};

// Exact brute-force evaluation of the identity's left side.
// DomainError when the assignment violates the validity domain.
Rat lhs_eval(IdentityId id, const Params& p);

// Exact closed-form evaluation of the right side.
Rat rhs_eval(IdentityId id, const Params& p);

// Right side as its list of additive terms (the mutation hook below flips
// one of them).
std::vector<Rat> rhs_terms(IdentityId id, const Params& p);

// Right side with the sign of term (term_index mod #terms) flipped.
// Verification against this must find counterexamples; it exists to prove
// the sweeps are not vacuous.
Rat rhs_eval_mutated(IdentityId id, const Params& p, size_t term_index);

// Inclusive integer range.
struct IntRange {
    long from = 0;
    long to = 0;
};

struct ParamGrid {
    std::optional<IntRange> m, k, t, r;
    std::vector<Rat> xs;
};

// The built-in sweep grid for an identity (same contents as the shipped
// grid files).
ParamGrid default_grid(IdentityId id);

struct Counterexample {
    Params params;
    Rat lhs;
    Rat rhs;
};

struct SkippedInstance {
    Params params;
    std::string reason;
};

struct VerificationReport {
    IdentityId id{};
    std::uint64_t checked = 0;
    std::vector<SkippedInstance> skipped;
    std::vector<Counterexample> counterexamples;
    std::chrono::duration<double> elapsed{};
    bool verified = false; // set to counterexamples.empty() by verify()
};

struct VerifyOptions {
    int jobs = 1;
    // When set, compare against rhs_eval_mutated with this term index.
    std::optional<size_t> mutate_term;
};

// Sweeps the grid in lexicographic (m, k, t, r, x) order and compares both
// sides for exact equality. Domain/singular errors are recorded as skipped
// instances. The report is deterministic for a given grid, independent of
// the job count.
VerificationReport verify(IdentityId id, const ParamGrid& grid,
                          const VerifyOptions& options = {});

// lhs = 2 sum_{j=0}^k j^p T_{j+r} by brute force, rhs = the closed form
// (p = 1 or 2; DomainError otherwise). Contract: lhs = rhs.
std::pair<Rat, Rat> weighted_power_sum(int p, long r, long k);

// Divided form of the arithmetic-progression sum:
// lhs = sum_{j=0}^k x^j T_{tj+r}, rhs = closed form over the cubic
// denominator in x. SingularError when 1 - l1 x - l2 x^2 - l3 x^3 = 0
// (the undivided form, identity AP, has no such exclusion).
std::pair<Rat, Rat> ap_sum(long t, long r, const Rat& x, long k);

// Generating function of j -> T_{tj+r}:
//   (T_r + (x l2 + x^2 l3) T_{r-t} + x l3 T_{r-2t}) / (1 - l1 x - l2 x^2 - l3 x^3).
// DomainError when t = 0.
RationalFunction ap_genfun(long t, long r);

// True iff |x| alpha^t < 1, decided rigorously from the exact rational
// bracket around alpha (the bracket is tightened as needed; throws
// IndeterminateError only if it cannot decide at extreme precision).
// Requires t >= 1.
bool ap_convergence_predicate(long t, const Rat& x);

} // namespace trisum
