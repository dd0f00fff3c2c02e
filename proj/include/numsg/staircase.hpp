#pragma once

/**
 * @file staircase.hpp
 * @brief Standard monomials of the reduced basis as gap and element sets.
 *
 * With corners q_i (the lead exponents), a point p is standard when no q_i
 * divides it. Standard points off the wall x = 0 are in bijection with the
 * gaps via p -> s_0 + sum s_i a_i; standard points on the wall are in
 * bijection with the elements of S. The standard set is downward closed, so
 * both sets are enumerated by breadth-first search from the origin slice.
 */

#include "numsg/groebner.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace numsg {

class StaircaseModel {
public:
    explicit StaircaseModel(const GroebnerBasis& basis);

    /// Lead exponents, ascending under the order (q_1 first).
    const std::vector<ExponentVector>& corners() const noexcept { return corners_; }
    const SemigroupSpec& spec() const noexcept { return spec_; }
    const MonomialOrder& order() const noexcept { return order_; }

    bool is_standard(const ExponentVector& p) const;

private:
    SemigroupSpec spec_;
    MonomialOrder order_;
    std::vector<ExponentVector> corners_;
};

inline StaircaseModel build_staircase(const GroebnerBasis& basis) { return StaircaseModel(basis); }

inline bool is_standard(const StaircaseModel& model, const ExponentVector& p) { return model.is_standard(p); }

/// Standard points with s_0 >= 1, keyed by s_0. Points are full vectors,
/// ascending under the order within each level.
std::map<std::int64_t, std::vector<ExponentVector>> gap_points(const StaircaseModel& model);

/// Standard points with s_0 = 0 and sum s_i a_i <= alpha, ascending by value.
std::vector<ExponentVector> element_points(const StaircaseModel& model, std::int64_t alpha);

std::vector<std::int64_t> gaps_via_staircase(const StaircaseModel& model);
std::vector<std::int64_t> elements_via_staircase(const StaircaseModel& model, std::int64_t alpha);

struct CertifiedMembership {
    std::int64_t n = 0;
    bool member = false;
    ExponentVector certificate;  // normal-form exponents of x^n

    /// "13 = 1 + 1*5 + 1*7"
    std::string decomposition(const SemigroupSpec& spec) const;
};

CertifiedMembership certify(const GroebnerBasis& basis, std::int64_t n);

} // namespace numsg
