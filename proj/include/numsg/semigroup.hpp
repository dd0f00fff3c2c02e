#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups and their invariants by dynamic programming.
 *
 * Everything here is computed from a plain reachability table
 * r[0] = true, r[n] = OR_i r[n - a_i]. The table is deliberately naive: it is
 * the ground truth the Groebner-basis route in groebner.hpp / staircase.hpp is
 * checked against, so it must stay simple enough to trust by inspection.
 */

#include "numsg/bigint.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace numsg {

/// The semigroup <a_1, ..., a_k>: strictly ascending, coprime generators.
class SemigroupSpec {
public:
    std::span<const std::int64_t> generators() const noexcept { return gens_; }
    std::size_t rank() const noexcept { return gens_.size(); }
    std::int64_t operator[](std::size_t i) const { return gens_[i]; }
    std::int64_t smallest() const noexcept { return gens_.front(); }
    std::int64_t largest() const noexcept { return gens_.back(); }

    /// True for <1>, i.e. the whole of Z>=0.
    bool is_everything() const noexcept { return gens_.front() == 1; }

    std::string to_string() const;

    friend bool operator==(const SemigroupSpec&, const SemigroupSpec&) = default;

private:
    explicit SemigroupSpec(std::vector<std::int64_t> gens) : gens_(std::move(gens)) {}
    friend SemigroupSpec normalize(std::span<const std::int64_t> raw);

    std::vector<std::int64_t> gens_;
};

/// Sorts and deduplicates. Throws Error with kind EmptyInput,
/// NonPositiveGenerator or GcdNotOne (value() holds the gcd).
SemigroupSpec normalize(std::span<const std::int64_t> raw);
inline SemigroupSpec normalize(std::initializer_list<std::int64_t> raw) {
    return normalize(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

/// Parses "5,7,12" (whitespace tolerated) and normalizes.
SemigroupSpec parse_generators(const std::string& text);

struct InvariantReport {
    std::int64_t frobenius = -1;   // -1 for Z>=0
    std::int64_t genus = 0;
    std::int64_t conductor = 0;
    std::int64_t multiplicity = 1;
    std::int64_t embedding_dimension = 1;
    std::vector<std::int64_t> gaps;
    std::vector<std::int64_t> sporadic;  // S ∩ [0, f], includes 0 when f >= 0
    std::int64_t sporadic_count_with_zero = 0;
    std::int64_t sporadic_count_without_zero = 0;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

struct WilfReport {
    std::int64_t conductor = 0;
    std::int64_t embedding_dimension = 0;
    std::int64_t n_with_zero = 0;
    bool holds = true;
};

/// Upper bound on the Frobenius number used to size tables:
/// f <= (a_1 - 1)(a_k - 1) - 1 (Schur). Returns -1 for Z>=0.
std::int64_t frobenius_upper_bound(const SemigroupSpec& s);

/// Reachability table over [0, limit]. Throws ResourceLimit if the table
/// would exceed `max_table_entries()`.
std::vector<char> membership_table(const SemigroupSpec& s, std::int64_t limit);
constexpr std::int64_t max_table_entries() { return 200'000'000; }

bool is_member(const SemigroupSpec& s, std::int64_t n);
InvariantReport invariants(const SemigroupSpec& s);

/// #{x in S : x <= alpha}, counting 0.
std::int64_t n_of_alpha(const SemigroupSpec& s, std::int64_t alpha);

/// Number of (y_1..y_k) in Z>=0^k with sum y_i a_i = n.
BigInt denumerant(const SemigroupSpec& s, std::int64_t n);

SemigroupSpec minimal_generators(const SemigroupSpec& s);
WilfReport wilf_check(const SemigroupSpec& s);

} // namespace numsg
