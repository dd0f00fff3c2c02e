#include "doctest.h"

#include "numsg/bounds.hpp"
#include "numsg/error.hpp"
#include "numsg/reference_tables.hpp"
#include "numsg/selftest.hpp"

#include <algorithm>
#include <random>

using namespace numsg;

namespace {

std::vector<Rational> R(std::initializer_list<std::int64_t> v) {
    std::vector<Rational> out;
    for (auto x : v) out.emplace_back(x);
    return out;
}

// Plain box enumeration with rational sums.
BigInt box_count(const std::vector<Rational>& alphas, bool positive) {
    const std::size_t n = alphas.size();
    std::vector<std::int64_t> hi(n);
    for (std::size_t i = 0; i < n; ++i) hi[i] = floor(alphas[i]).convert_to<std::int64_t>();
    BigInt count = 0;
    std::vector<std::int64_t> x(n, positive ? 1 : 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            Rational s = 0;
            for (std::size_t j = 0; j < n; ++j) s += Rational(x[j]) / alphas[j];
            count += s <= 1;
            return;
        }
        for (x[i] = positive ? 1 : 0; x[i] <= hi[i]; ++x[i]) self(self, i + 1);
    };
    rec(rec, 0);
    return count;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInconsistency;
}

} // namespace

TEST_SUITE("bounds") {

TEST_CASE("count_q") {
    CHECK(count_q(R({1, 1})) == 3);
    CHECK(count_q(R({2, 2})) == 6);
    CHECK(count_q(std::vector<Rational>{Rational(1, 3)}) == 1);
    CHECK(count_q(std::vector<Rational>{Rational(7, 2)}) == 4);
}

TEST_CASE("count_p") {
    CHECK(count_p(R({2, 2})) == 1);
    CHECK(count_p(R({1, 1})) == 0);
    CHECK(count_p(R({3, 3})) == 3);
    CHECK(count_p(R({4, 4})) == 6);
    CHECK(count_p(R({6, 6, 6})) == 20);
}

TEST_CASE("counts against box enumeration") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::size_t> nd(1, 4);
    for (int c = 0; c < 300; ++c) {
        const auto alphas = random_rationals(rng, nd(rng), 9, 7);
        CHECK(count_q(alphas) == box_count(alphas, false));
        CHECK(count_p(alphas) == box_count(alphas, true));
        CHECK(count_q(alphas) >= 1);
    }
}

TEST_CASE("shift_lemma_check") {
    CHECK(shift_lemma_check(R({1, 1})));
    CHECK(shift_lemma_check(R({2, 2})));
    CHECK(shift_lemma_check(R({5})));
    CHECK(shift_lemma_check(std::vector<Rational>{Rational(7, 3)}));
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> nd(1, 4);
    for (int c = 0; c < 100; ++c) CHECK(shift_lemma_check(random_rationals(rng, nd(rng), 20, 20)));
}

TEST_CASE("gly weak estimate") {
    auto cmp = gly_weak_compare(R({6, 6, 6}));
    CHECK(cmp.lhs == 120);
    CHECK(cmp.rhs == 125);
    CHECK(cmp.holds);
    CHECK_FALSE(cmp.equality);

    cmp = gly_weak_compare(R({5, 3, 2}));
    CHECK(cmp.lhs == 0);
    CHECK(cmp.rhs == 8);
    CHECK(cmp.holds);

    cmp = gly_weak_compare(R({3, 2, 1}));
    CHECK(cmp.lhs == 0);
    CHECK(cmp.rhs == 0);
    CHECK(cmp.equality);

    CHECK(kind_of([] { gly_weak_compare(R({3, 2})); }) == ErrorKind::PreconditionViolation);
    CHECK(kind_of([] { gly_weak_compare(std::vector<Rational>{3, 2, Rational(1, 2)}); }) ==
          ErrorKind::PreconditionViolation);
    CHECK(kind_of([] { gly_weak_compare(R({2, 3, 4})); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("gly_based_bound") {
    CHECK(gly_based_bound(normalize({5, 6, 11})) == 19);
    CHECK(gly_based_bound(normalize({6, 9, 20})) == 44);
    CHECK(gly_based_bound(normalize({5, 7})) == 12);
    CHECK(gly_based_bound_exact(normalize({5, 7})) == Rational(12));
    CHECK(kind_of([] { gly_based_bound(normalize({1})); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("prism_pyramid_high") {
    const auto s = normalize({5, 7});
    CHECK(prism_pyramid_high(s, 35) == 24);
    CHECK(n_of_alpha(s, 35) == 24);
    CHECK(prism_pyramid_high(s, 36) == 25);
    CHECK(n_of_alpha(s, 36) == 25);
    CHECK(prism_pyramid_high(normalize({2, 3}), 6) == 6);
    CHECK(n_of_alpha(normalize({2, 3}), 6) == 6);
    CHECK(kind_of([&] { prism_pyramid_high(s, 34); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("prism_pyramid_low") {
    const auto s = normalize({5, 7});
    CHECK(prism_pyramid_low(s, 20) == 10);
    CHECK(n_of_alpha(s, 20) == 10);
    CHECK(prism_pyramid_low(s, 0) == 1);
    CHECK(prism_pyramid_low(s, 35) == 25);
    CHECK(kind_of([&] { prism_pyramid_low(s, 36); }) == ErrorKind::PreconditionViolation);
    CHECK(kind_of([&] { prism_pyramid_low(s, -1); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("simple_corollary_bound") {
    CHECK(simple_corollary_bound(normalize({5, 7}), 35) == 35);
    CHECK(simple_corollary_bound(normalize({2, 3}), 6) == 6);
    CHECK(simple_corollary_bound(normalize({7, 9, 11}), 63) == 441);
    CHECK(kind_of([] { simple_corollary_bound(normalize({5, 7}), 30); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("n_s_corollary_bound") {
    CHECK(n_s_corollary_bound(normalize({5, 7})) == 13);
    CHECK(n_s_corollary_bound(normalize({2, 3})) == 2);
    std::mt19937_64 rng(37);
    for (int c = 0; c < 100; ++c) {
        const auto s = random_spec(rng, 2, 5, 2, 40);
        const std::int64_t a1a2 = s[0] * s[1];
        CHECK(n_s_corollary_bound(s) == prism_pyramid_low(s, a1a2) + invariants(s).frobenius - a1a2);
    }
}

TEST_CASE("bound_report and bound_table") {
    auto r = bound_report(normalize({5, 6, 19}));
    CHECK(r.frobenius == 14);
    CHECK(r.n_true_without_zero == 5);
    CHECK(r.gly_bound == 10);
    REQUIRE(r.ratio);
    CHECK(*r.ratio == 2);

    const std::vector<SemigroupSpec> specs{normalize({7, 11, 34, 37}), normalize({10, 19, 31, 37, 54, 65}),
                                           normalize({5, 7})};
    const auto rows = bound_table(specs);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].spec == specs[0]);
    CHECK(rows[0].frobenius == 38);
    CHECK(rows[0].gly_bound == 50);
    CHECK(rows[1].frobenius == 63);
    CHECK(rows[1].gly_bound == 366);
    CHECK(rows[2].spec == specs[2]);

    // concurrency keeps input order and matches the serial result
    std::mt19937_64 rng(41);
    std::vector<SemigroupSpec> many;
    for (int c = 0; c < 40; ++c) many.push_back(random_spec(rng, 2, 4, 2, 30));
    const auto table = bound_table(many);
    for (std::size_t i = 0; i < many.size(); ++i) {
        CHECK(table[i].spec == many[i]);
        CHECK(table[i].gly_bound == bound_report(many[i]).gly_bound);
    }
}

TEST_CASE("published rows") {
    const auto checks = check_reference_rows();
    REQUIRE(checks.size() == 32);
    std::size_t matches = 0;
    for (const auto& c : checks) {
        CHECK(c.status != RowStatus::Mismatch);
        matches += c.bound_matches;
        if (c.frobenius_confirmed && c.n_confirmed) CHECK(c.bound_matches);
    }
    CHECK(matches >= 30);
    auto find = [&](std::vector<std::int64_t> g) {
        return *std::find_if(checks.begin(), checks.end(), [&](const RowCheck& c) { return c.row.generators == g; });
    };
    CHECK(find({5, 6, 11}).status == RowStatus::Erratum);
    CHECK(find({5, 6, 11}).bound_matches);
    CHECK(find({7, 11, 23, 17}).status == RowStatus::Erratum);
    CHECK(find({6, 9, 20}).status == RowStatus::Match);
}

TEST_CASE("soundness sweep") {
    std::mt19937_64 rng(43);
    for (int c = 0; c < 120; ++c) {
        const auto s = random_spec(rng, 2, 5, 2, 60);
        const std::int64_t a1a2 = s[0] * s[1];
        std::uniform_int_distribution<std::int64_t> ad(0, 3 * a1a2);
        for (int t = 0; t < 6; ++t) {
            const std::int64_t alpha = ad(rng);
            const std::int64_t truth = n_of_alpha(s, alpha);
            if (alpha >= a1a2) {
                CHECK(prism_pyramid_high(s, alpha) >= truth);
                CHECK(prism_pyramid_high(s, alpha) <= simple_corollary_bound(s, alpha));
            } else {
                CHECK(prism_pyramid_low(s, alpha) >= truth);
            }
        }
        const auto inv = invariants(s);
        if (s.rank() >= 3) CHECK(gly_based_bound(s) >= inv.sporadic_count_with_zero);
        CHECK(n_s_corollary_bound(s) >= inv.sporadic_count_with_zero);
    }
}

}
