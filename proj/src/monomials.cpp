#include "numsg/monomials.hpp"

#include "numsg/error.hpp"

#include <algorithm>
#include <sstream>

namespace numsg {

namespace {

void require_same_length(const ExponentVector& u, const ExponentVector& v) {
    if (u.size() != v.size())
        throw Error(ErrorKind::LengthMismatch, "exponent vectors of length " + std::to_string(u.size()) +
                                                   " and " + std::to_string(v.size()));
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "exponent overflow");
    return out;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "exponent overflow");
    return out;
}

} // namespace

ExponentVector::ExponentVector(std::vector<std::int64_t> exps) : exps_(std::move(exps)) {
    for (std::int64_t e : exps_)
        if (e < 0) throw Error(ErrorKind::PreconditionViolation, "negative exponent " + std::to_string(e));
}

ExponentVector ExponentVector::unit(std::size_t len, std::size_t idx, std::int64_t scale) {
    std::vector<std::int64_t> e(len, 0);
    e.at(idx) = scale;
    return ExponentVector(std::move(e));
}

bool ExponentVector::is_zero() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

std::string ExponentVector::to_monomial_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) out << '*';
        first = false;
        if (i == 0) out << 'x';
        else out << 'y' << i;
        if (exps_[i] > 1) out << '^' << exps_[i];
    }
    if (first) out << '1';
    return out.str();
}

std::string ExponentVector::to_tuple_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < exps_.size(); ++i) out << (i ? "," : "") << exps_[i];
    out << ')';
    return out.str();
}

std::strong_ordering compare(const MonomialOrder&, const ExponentVector& u, const ExponentVector& v) {
    require_same_length(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (auto c = u[i] <=> v[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

bool divides(const ExponentVector& u, const ExponentVector& v) {
    require_same_length(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

ExponentVector lcm(const ExponentVector& u, const ExponentVector& v) {
    require_same_length(u, v);
    std::vector<std::int64_t> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = std::max(u[i], v[i]);
    return ExponentVector(std::move(e));
}

ExponentVector mul(const ExponentVector& u, const ExponentVector& v) {
    require_same_length(u, v);
    std::vector<std::int64_t> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) e[i] = add_checked(u[i], v[i]);
    return ExponentVector(std::move(e));
}

ExponentVector sub(const ExponentVector& u, const ExponentVector& v) {
    require_same_length(u, v);
    std::vector<std::int64_t> e(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] > u[i])
            throw Error(ErrorKind::SubUnderflow, v.to_tuple_string() + " does not divide " + u.to_tuple_string());
        e[i] = u[i] - v[i];
    }
    return ExponentVector(std::move(e));
}

bool disjoint_support(const ExponentVector& u, const ExponentVector& v) {
    require_same_length(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0 && v[i] != 0) return false;
    return true;
}

std::int64_t weight(const ExponentVector& v, std::span<const std::int64_t> gens) {
    if (gens.size() + 1 != v.size())
        throw Error(ErrorKind::LengthMismatch, "weight needs one generator per y variable");
    std::int64_t w = v[0];
    for (std::size_t i = 0; i < gens.size(); ++i) w = add_checked(w, mul_checked(v[i + 1], gens[i]));
    return w;
}

} // namespace numsg
