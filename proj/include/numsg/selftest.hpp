#pragma once

// Randomized cross-checks of the Groebner route against the table oracle and
// of the bounds against true counts. Used by `numsg selftest`.

#include "numsg/bigint.hpp"
#include "numsg/semigroup.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace numsg {

/// Uniform k in [min_rank, max_rank], distinct generators in [min_gen, max_gen],
/// redrawn until coprime.
SemigroupSpec random_spec(std::mt19937_64& rng, std::size_t min_rank, std::size_t max_rank, std::int64_t min_gen,
                          std::int64_t max_gen);

/// n rationals p/q with 1 <= p <= max_value * q, 1 <= q <= max_den.
std::vector<Rational> random_rationals(std::mt19937_64& rng, std::size_t n, std::int64_t max_value,
                                       std::int64_t max_den);

struct SelftestOptions {
    std::uint64_t seed = 2013;
    std::size_t cases = 60;
    // Name of a property whose check is deliberately corrupted; empty for none.
    std::string inject_fault;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::size_t checks = 0;
    std::string detail{};
};

struct SelftestReport {
    std::vector<PropertyResult> results;

    bool passed() const;
    const PropertyResult* first_failure() const;
};

std::vector<std::string> selftest_property_names();
SelftestReport run_selftest(const SelftestOptions& options);

} // namespace numsg
