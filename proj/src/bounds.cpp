#include "numsg/bounds.hpp"

#include "numsg/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace numsg {

namespace {

namespace mp = boost::multiprecision;

void require_positive(std::span<const Rational> alphas, const char* what) {
    if (alphas.empty()) throw Error(ErrorKind::PreconditionViolation, std::string(what) + " needs at least one alpha");
    for (const auto& a : alphas)
        if (a <= 0) throw Error(ErrorKind::PreconditionViolation, std::string(what) + " needs every alpha > 0");
}

// Scales sum x_i/alpha_i <= 1 by D = lcm of the numerators of alpha_i:
// sum x_i * w_i <= D with integer w_i = den_i * D / num_i.
struct ScaledSimplex {
    std::vector<BigInt> weights;
    BigInt budget;
};

ScaledSimplex scale(std::span<const Rational> alphas) {
    BigInt d = 1;
    for (const auto& a : alphas) d = mp::lcm(d, BigInt(mp::numerator(a)));
    ScaledSimplex s{{}, d};
    for (const auto& a : alphas) s.weights.push_back(mp::denominator(a) * d / mp::numerator(a));
    return s;
}

// Points with every coordinate >= lo and sum x_i w_i <= budget. The last
// coordinate is counted directly; earlier ones are enumerated with the
// remaining budget as cutoff.
template <class Int>
Int count_points(const std::vector<Int>& w, std::size_t idx, Int budget, Int lo) {
    const Int floor_cap = budget / w[idx];
    if (floor_cap < lo) return 0;
    if (idx + 1 == w.size()) return floor_cap - lo + 1;
    Int total = 0;
    for (Int x = lo; x <= floor_cap; ++x) total += count_points(w, idx + 1, Int(budget - x * w[idx]), lo);
    return total;
}

BigInt count_scaled(std::span<const Rational> alphas, int lo) {
    auto s = scale(alphas);
    // Fast path: fits comfortably in 64 bits (products stay below budget).
    const BigInt limit = BigInt(1) << 62;
    if (s.budget < limit) {
        std::vector<std::int64_t> w;
        for (const auto& v : s.weights) w.push_back(v.convert_to<std::int64_t>());
        return BigInt(count_points<std::int64_t>(w, 0, s.budget.convert_to<std::int64_t>(), lo));
    }
    return count_points<BigInt>(s.weights, 0, s.budget, BigInt(lo));
}

void require_rank_two(const SemigroupSpec& s, const char* what) {
    if (s.rank() < 2) throw Error(ErrorKind::PreconditionViolation, std::string(what) + " needs at least two generators");
}

BigInt pow_k1(const BigInt& base, std::size_t k) { return mp::pow(base, static_cast<unsigned>(k - 1)); }

BigInt factorial(std::size_t n) {
    BigInt out = 1;
    for (std::size_t i = 2; i <= n; ++i) out *= static_cast<unsigned>(i);
    return out;
}

} // namespace

BigInt count_q(std::span<const Rational> alphas) {
    require_positive(alphas, "count_q");
    return count_scaled(alphas, 0);
}

BigInt count_p(std::span<const Rational> alphas) {
    require_positive(alphas, "count_p");
    return count_scaled(alphas, 1);
}

bool shift_lemma_check(std::span<const Rational> alphas) {
    require_positive(alphas, "shift_lemma_check");
    Rational inv_sum = 0;
    for (const auto& a : alphas) inv_sum += 1 / a;
    std::vector<Rational> stretched;
    for (const auto& a : alphas) stretched.push_back(a * (1 + inv_sum));
    return count_q(alphas) == count_p(stretched);
}

GlyWeakComparison gly_weak_compare(std::span<const Rational> alphas) {
    if (alphas.size() < 3) throw Error(ErrorKind::PreconditionViolation, "the weak estimate needs n >= 3");
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i)
        if (alphas[i] < alphas[i + 1])
            throw Error(ErrorKind::PreconditionViolation, "the weak estimate needs alphas in descending order");
    if (alphas.back() < 1) throw Error(ErrorKind::PreconditionViolation, "the weak estimate needs alpha_n >= 1");

    GlyWeakComparison c;
    c.lhs = factorial(alphas.size()) * count_p(alphas);
    c.rhs = 1;
    for (const auto& a : alphas) c.rhs *= a - 1;
    c.holds = Rational(c.lhs) <= c.rhs;
    c.equality = Rational(c.lhs) == c.rhs;
    return c;
}

Rational gly_based_bound_exact(const SemigroupSpec& s) {
    require_rank_two(s, "gly_based_bound");
    const std::int64_t f = invariants(s).frobenius;
    BigInt total_gens = 0;
    BigInt gens_product = 1;
    for (std::int64_t a : s.generators()) {
        total_gens += a;
        gens_product *= a;
    }
    BigInt numerator = 1;
    for (std::int64_t a : s.generators()) numerator *= f + total_gens - a;
    return Rational(numerator, factorial(s.rank()) * gens_product);
}

BigInt gly_based_bound(const SemigroupSpec& s) { return floor(gly_based_bound_exact(s)); }

BigInt prism_pyramid_high(const SemigroupSpec& s, std::int64_t alpha) {
    require_rank_two(s, "prism_pyramid_high");
    const BigInt a1 = s[0], a2 = s[1];
    if (alpha < a1 * a2) throw Error(ErrorKind::PreconditionViolation, "prism_pyramid_high needs alpha >= a_1 a_2");

    const Rational alpha_over_a1(BigInt(alpha), a1);
    const Rational frac(BigInt(alpha) % a1, a1);

    BigInt prism = mp::pow(a1, static_cast<unsigned>(s.rank() - 1)) * (floor(alpha_over_a1 - Rational(a2)) + 1);
    BigInt pyramid = 0;
    for (BigInt lambda = 0; lambda < a2; ++lambda)
        pyramid += pow_k1(floor(Rational(a1) * (Rational(lambda) + frac) / Rational(a2)) + 1, s.rank());
    return prism + pyramid;
}

BigInt prism_pyramid_low(const SemigroupSpec& s, std::int64_t alpha) {
    require_rank_two(s, "prism_pyramid_low");
    const BigInt a1 = s[0], a2 = s[1];
    if (alpha < 0 || alpha > a1 * a2)
        throw Error(ErrorKind::PreconditionViolation, "prism_pyramid_low needs 0 <= alpha <= a_1 a_2");
    BigInt total = 0;
    const BigInt top = floor_div(alpha, a1);
    for (BigInt lambda = 0; lambda <= top; ++lambda)
        total += pow_k1(floor_div(BigInt(alpha) - lambda * a1, a2) + 1, s.rank());
    return total;
}

BigInt simple_corollary_bound(const SemigroupSpec& s, std::int64_t alpha) {
    require_rank_two(s, "simple_corollary_bound");
    const BigInt a1 = s[0], a2 = s[1];
    if (alpha < a1 * a2) throw Error(ErrorKind::PreconditionViolation, "simple_corollary_bound needs alpha >= a_1 a_2");
    return mp::pow(a1, static_cast<unsigned>(s.rank() - 1)) * floor_div(alpha, a1);
}

BigInt n_s_corollary_bound(const SemigroupSpec& s) {
    require_rank_two(s, "n_s_corollary_bound");
    const BigInt a1 = s[0], a2 = s[1];
    BigInt total = 0;
    for (BigInt lambda = 0; lambda <= a2; ++lambda) total += pow_k1(floor_div(a1 * (a2 - lambda), a2) + 1, s.rank());
    return total + invariants(s).frobenius - a1 * a2;
}

BoundReport bound_report(const SemigroupSpec& s) {
    require_rank_two(s, "bound_report");
    const auto inv = invariants(s);
    const std::int64_t a1a2 = s[0] * s[1];

    BoundReport r{.spec = s};
    r.frobenius = inv.frobenius;
    r.n_true_with_zero = inv.sporadic_count_with_zero;
    r.n_true_without_zero = inv.sporadic_count_without_zero;
    r.gly_bound_exact = gly_based_bound_exact(s);
    r.gly_bound = floor(r.gly_bound_exact);
    r.prism_pyramid_bound = n_s_corollary_bound(s);
    r.simple_corollary_bound = simple_corollary_bound(s, a1a2) + inv.frobenius - a1a2;
    if (r.n_true_without_zero > 0) r.ratio = Rational(r.gly_bound, r.n_true_without_zero);
    return r;
}

std::vector<BoundReport> bound_table(std::span<const SemigroupSpec> specs) {
    std::vector<std::optional<BoundReport>> slots(specs.size());
    std::vector<std::exception_ptr> errors(specs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                slots[i] = bound_report(specs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < std::min(threads, specs.size()); ++t) pool.emplace_back(worker);
    worker();
    pool.clear();

    std::vector<BoundReport> out;
    out.reserve(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

} // namespace numsg
