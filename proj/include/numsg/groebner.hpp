#pragma once

/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm for the ideal I = <y_i - x^{a_i}>.
 *
 * I is generated by pure-difference binomials, so every S-pair and every
 * reduction step stays a pure-difference binomial and the normal form of a
 * monomial is again a monomial. Polynomials are therefore never materialized:
 * a Binomial is just an ordered pair of exponent vectors.
 *
 * I is also homogeneous for the weight w(x) = 1, w(y_i) = a_i, and every
 * element has w(lead) = w(tail). Reduction preserves w; the code checks it.
 */

#include "numsg/monomials.hpp"
#include "numsg/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace numsg {

/// lead - tail, with compare(lead, tail) == greater.
struct Binomial {
    ExponentVector lead;
    ExponentVector tail;

    /// Orders the pair under `order`; nullopt when a == b (the zero binomial).
    static std::optional<Binomial> oriented(ExponentVector a, ExponentVector b, const MonomialOrder& order = {});

    std::string to_string() const;

    friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct BuchbergerLimits {
    std::size_t max_pairs = 1'000'000;
    std::size_t max_basis = 100'000;
};

struct BuchbergerStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_processed = 0;
    std::size_t product_criterion_skips = 0;
    std::size_t zero_reductions = 0;
    std::size_t elements_added = 0;
};

/// Default step budget for reduce_monomial. Reduction terminates because the
/// order is a well-order; the budget only turns a bug into an error.
constexpr std::uint64_t kDefaultReductionFuel = 1ull << 36;

/// The reduced Groebner basis of I under the elimination lex order.
/// Elements are sorted by lead, descending. Immutable once built.
class GroebnerBasis {
public:
    const MonomialOrder& order() const noexcept { return order_; }
    std::span<const Binomial> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const SemigroupSpec& spec() const noexcept { return spec_; }
    const BuchbergerStats& stats() const noexcept { return stats_; }

    /// Normal form of m, checked for weight conservation.
    ExponentVector reduce(const ExponentVector& m) const;

private:
    GroebnerBasis(SemigroupSpec spec, std::vector<Binomial> elements, BuchbergerStats stats)
        : spec_(std::move(spec)), elements_(std::move(elements)), stats_(stats) {}
    friend GroebnerBasis buchberger(const SemigroupSpec&, const BuchbergerLimits&);

    MonomialOrder order_{};
    SemigroupSpec spec_;
    std::vector<Binomial> elements_;
    BuchbergerStats stats_;
};

/// y_i - x^{a_i}, oriented (lead x^{a_i}).
std::vector<Binomial> ideal_generators(const SemigroupSpec& spec);

/// With L = lcm(lead f, lead g): the binomial (L/lead_f) tail_f - (L/lead_g) tail_g,
/// or nullopt when both monomials coincide.
std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& order = {});

/// Rewrites m <- m - lead + tail using the lowest-index element whose lead
/// divides m, until none does. Works for any binomial list; the result is the
/// unique normal form when `basis` is a Groebner basis. Throws ResourceLimit
/// when `fuel` steps are exhausted.
ExponentVector reduce_monomial(std::span<const Binomial> basis, const ExponentVector& m,
                               std::uint64_t fuel = kDefaultReductionFuel);

GroebnerBasis buchberger(const SemigroupSpec& spec, const BuchbergerLimits& limits = {});

/// Normal form of x^n. Postconditions (checked): s_0 + sum s_i a_i = n,
/// s_0 < a_1, and s_0 == 0 exactly for members.
ExponentVector normal_form_of_power(const GroebnerBasis& basis, std::int64_t n);

/// No lead divides another lead or any tail.
bool is_reduced(std::span<const Binomial> basis);

/// Every S-pair reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(std::span<const Binomial> basis);

} // namespace numsg
