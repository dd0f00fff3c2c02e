#pragma once

/**
 * @file bounds.hpp
 * @brief Lattice-point counts in rational simplices and upper bounds on
 *        n(S, alpha) = #{s in S : s <= alpha}.
 *
 * Every quantity is exact. Simplex counts scale the constraint
 * sum x_i / alpha_i <= 1 to integers and enumerate depth-first, so no value
 * is rounded before the final floor.
 *
 * Conventions: bounds are compared against counts that include 0. The
 * published accuracy tables list n(S) without 0; BoundReport carries both.
 */

#include "numsg/bigint.hpp"
#include "numsg/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace numsg {

/// #{x in Z>=0^n : sum x_i / alpha_i <= 1}. Requires every alpha_i > 0.
BigInt count_q(std::span<const Rational> alphas);

/// #{x in Z>0^n : sum x_i / alpha_i <= 1}. Requires every alpha_i > 0.
BigInt count_p(std::span<const Rational> alphas);

/// q(a_1..a_n) == p(a_1(1+s)..a_n(1+s)) with s = sum 1/a_i, both sides counted.
bool shift_lemma_check(std::span<const Rational> alphas);

struct GlyWeakComparison {
    BigInt lhs;    // n! * p(alphas)
    Rational rhs;  // prod (alpha_i - 1)
    bool holds = false;
    bool equality = false;
};

/// Requires n >= 3 and alpha_1 >= ... >= alpha_n >= 1 (PreconditionViolation).
GlyWeakComparison gly_weak_compare(std::span<const Rational> alphas);
inline bool gly_weak_holds(std::span<const Rational> alphas) { return gly_weak_compare(alphas).holds; }

/// prod_j (f + sum_{i != j} a_i) / (k! a_1...a_k), exact. Requires k >= 2.
Rational gly_based_bound_exact(const SemigroupSpec& s);
BigInt gly_based_bound(const SemigroupSpec& s);

/// Prism plus pyramid count for alpha >= a_1 a_2:
/// a_1^{k-1}(floor(alpha/a_1 - a_2) + 1) + sum_{l=0}^{a_2-1} (floor(a_1 (l + {alpha/a_1}) / a_2) + 1)^{k-1}.
BigInt prism_pyramid_high(const SemigroupSpec& s, std::int64_t alpha);

/// Pyramid-only count for 0 <= alpha <= a_1 a_2:
/// sum_{l=0}^{floor(alpha/a_1)} (floor((alpha - l a_1)/a_2) + 1)^{k-1}.
BigInt prism_pyramid_low(const SemigroupSpec& s, std::int64_t alpha);

/// a_1^{k-1} floor(alpha/a_1), for alpha >= a_1 a_2.
BigInt simple_corollary_bound(const SemigroupSpec& s, std::int64_t alpha);

/// sum_{l=0}^{a_2} (floor(a_1 (a_2 - l)/a_2) + 1)^{k-1} + f - a_1 a_2, a bound on n(S) with 0.
BigInt n_s_corollary_bound(const SemigroupSpec& s);

struct BoundReport {
    SemigroupSpec spec;
    std::int64_t frobenius = 0;
    std::int64_t n_true_with_zero = 0;
    std::int64_t n_true_without_zero = 0;
    Rational gly_bound_exact{};
    BigInt gly_bound{};
    /// n_s_corollary_bound(spec).
    BigInt prism_pyramid_bound{};
    /// simple_corollary_bound(spec, a_1 a_2) + f - a_1 a_2.
    BigInt simple_corollary_bound{};
    /// gly_bound / n_true_without_zero, the ratio column of the published tables.
    std::optional<Rational> ratio{};
};

/// Requires k >= 2.
BoundReport bound_report(const SemigroupSpec& s);

/// One report per spec, in input order; rows are evaluated concurrently.
std::vector<BoundReport> bound_table(std::span<const SemigroupSpec> specs);

} // namespace numsg
