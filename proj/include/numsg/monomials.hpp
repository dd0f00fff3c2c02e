#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace numsg {

/// Exponents of x^{s_0} y_1^{s_1} ... y_k^{s_k}; index 0 is x.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<std::int64_t> exps);
    ExponentVector(std::initializer_list<std::int64_t> exps)
        : ExponentVector(std::vector<std::int64_t>(exps)) {}

    static ExponentVector zero(std::size_t len) { return ExponentVector(std::vector<std::int64_t>(len, 0)); }
    static ExponentVector unit(std::size_t len, std::size_t idx, std::int64_t scale = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    std::int64_t operator[](std::size_t i) const { return exps_[i]; }
    std::span<const std::int64_t> values() const noexcept { return exps_; }
    bool is_zero() const noexcept;

    /// "x^2*y1*y3", or "1" for the zero vector.
    std::string to_monomial_string() const;
    /// "(2,1,0,1)"
    std::string to_tuple_string() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<std::int64_t> exps_;
};

/// Lexicographic, x > y_1 > ... > y_k. This is an elimination order for x:
/// anything carrying a positive x-exponent beats every monomial free of x.
struct MonomialOrder {
    enum class Kind { EliminationLex };
    Kind kind = Kind::EliminationLex;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::strong_ordering compare(const MonomialOrder& order, const ExponentVector& u, const ExponentVector& v);
inline std::strong_ordering compare(const ExponentVector& u, const ExponentVector& v) {
    return compare(MonomialOrder{}, u, v);
}

/// u <= v componentwise.
bool divides(const ExponentVector& u, const ExponentVector& v);

ExponentVector lcm(const ExponentVector& u, const ExponentVector& v);
ExponentVector mul(const ExponentVector& u, const ExponentVector& v);
/// Throws SubUnderflow unless v divides u.
ExponentVector sub(const ExponentVector& u, const ExponentVector& v);
/// True when u and v share no variable (the product criterion's test).
bool disjoint_support(const ExponentVector& u, const ExponentVector& v);

/// s_0 + sum s_i a_i. `gens` has length size()-1.
std::int64_t weight(const ExponentVector& v, std::span<const std::int64_t> gens);

} // namespace numsg
