#include "doctest.h"

#include "numsg/error.hpp"
#include "numsg/selftest.hpp"
#include "numsg/semigroup.hpp"

#include "oracle.hpp"

#include <random>

using namespace numsg;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInconsistency;
}

std::vector<std::int64_t> gens_of(const SemigroupSpec& s) { return {s.generators().begin(), s.generators().end()}; }

} // namespace

TEST_SUITE("semigroup") {

TEST_CASE("normalize sorts and deduplicates") {
    CHECK(normalize({7, 5}).to_string() == "<5,7>");
    CHECK(normalize({7, 11, 23, 17}).to_string() == "<7,11,17,23>");
    CHECK(normalize({5, 7, 5}) == normalize({5, 7}));
    CHECK(normalize({1}).is_everything());
}

TEST_CASE("normalize rejects bad input") {
    try {
        normalize({4, 6});
        FAIL("expected GcdNotOne");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GcdNotOne);
        CHECK(e.value() == 2);
        CHECK(std::string(e.what()).find("gcd = 2") != std::string::npos);
    }
    CHECK(kind_of([] { normalize(std::span<const std::int64_t>{}); }) == ErrorKind::EmptyInput);
    CHECK(kind_of([] { normalize({0, 5}); }) == ErrorKind::NonPositiveGenerator);
    CHECK(kind_of([] { normalize({-3, 5}); }) == ErrorKind::NonPositiveGenerator);
}

TEST_CASE("parse_generators") {
    CHECK(parse_generators("5,7") == normalize({5, 7}));
    CHECK(parse_generators(" 7, 9 ,11 ") == normalize({7, 9, 11}));
    CHECK(kind_of([] { parse_generators("5,x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_generators("5,,7"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_generators(""); }) == ErrorKind::EmptyInput);
    CHECK(kind_of([] { parse_generators("4,6"); }) == ErrorKind::GcdNotOne);
}

TEST_CASE("is_member") {
    const auto s = normalize({5, 7});
    CHECK_FALSE(is_member(s, 13));
    CHECK(is_member(s, 0));
    CHECK(is_member(s, 35));
    CHECK(is_member(s, 24));
    CHECK_FALSE(is_member(s, 23));
    CHECK(kind_of([&] { is_member(s, -1); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("invariants of the worked examples") {
    auto r = invariants(normalize({5, 7}));
    CHECK(r.frobenius == 23);
    CHECK(r.genus == 12);
    CHECK(r.conductor == 24);
    CHECK(r.multiplicity == 5);
    CHECK(r.embedding_dimension == 2);
    CHECK(r.gaps == std::vector<std::int64_t>{1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23});
    CHECK(r.sporadic_count_with_zero == 12);
    CHECK(r.sporadic_count_without_zero == 11);

    r = invariants(normalize({7, 9, 11}));
    CHECK(r.frobenius == 26);
    CHECK(r.genus == 15);
    CHECK(r.gaps == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 19, 24, 26});

    r = invariants(normalize({2, 3}));
    CHECK(r.frobenius == 1);
    CHECK(r.gaps == std::vector<std::int64_t>{1});
    CHECK(r.genus == 1);
}

TEST_CASE("S = Z>=0") {
    const auto r = invariants(normalize({1}));
    CHECK(r.frobenius == -1);
    CHECK(r.conductor == 0);
    CHECK(r.genus == 0);
    CHECK(r.gaps.empty());
    CHECK(r.sporadic.empty());
    CHECK(invariants(normalize({1, 5})).frobenius == -1);
    CHECK(wilf_check(normalize({1})).holds);
}

TEST_CASE("Frobenius beyond a1*a2 when gcd(a1,a2) > 1") {
    // gcd(4,6) = 2, so the conductor is governed by the third generator
    const auto s = normalize({4, 6, 101});
    const auto r = invariants(s);
    const auto expect = oracle::gaps(gens_of(s), 400);
    CHECK(r.gaps == expect);
    CHECK(r.frobenius > 4 * 6);
    CHECK(r.frobenius == expect.back());
}

TEST_CASE("n_of_alpha") {
    const auto s = normalize({5, 7});
    CHECK(n_of_alpha(s, 23) == 12);
    CHECK(n_of_alpha(s, 0) == 1);
    CHECK(n_of_alpha(s, 35) == 24);
    CHECK(n_of_alpha(normalize({7, 9, 11}), 0) == 1);
}

TEST_CASE("denumerant") {
    const auto s = normalize({5, 7});
    CHECK(denumerant(s, 100) == 3);
    CHECK(denumerant(s, 327) == 10);
    CHECK(denumerant(s, 0) == 1);
    CHECK(denumerant(s, 13) == 0);
    CHECK(denumerant(normalize({1, 2}), 10) == 6);
}

TEST_CASE("minimal_generators") {
    CHECK(minimal_generators(normalize({2, 3, 4})) == normalize({2, 3}));
    CHECK(minimal_generators(normalize({7, 9, 11})) == normalize({7, 9, 11}));
    CHECK(minimal_generators(normalize({5, 7, 12})) == normalize({5, 7}));
    CHECK(minimal_generators(normalize({1, 4, 9})) == normalize({1}));
}

TEST_CASE("wilf_check") {
    auto w = wilf_check(normalize({5, 7}));
    CHECK(w.conductor == 24);
    CHECK(w.embedding_dimension == 2);
    CHECK(w.n_with_zero == 12);
    CHECK(w.holds);

    w = wilf_check(normalize({7, 9, 11}));
    CHECK(w.conductor == 27);
    CHECK(w.embedding_dimension == 3);
    CHECK(w.n_with_zero == 12);
    CHECK(w.holds);

    w = wilf_check(normalize({2, 3}));
    CHECK(w.conductor == 2);
    CHECK(w.embedding_dimension == 2);
    CHECK(w.n_with_zero == 1);
    CHECK(w.holds);
}

TEST_CASE("resource cap on the table") {
    CHECK(kind_of([] { membership_table(normalize({2, 3}), max_table_entries() + 1); }) ==
          ErrorKind::ResourceLimit);
}

TEST_CASE("random specs agree with brute force") {
    std::mt19937_64 rng(11);
    for (int c = 0; c < 150; ++c) {
        const auto s = random_spec(rng, 1, 4, 2, 40);
        const auto r = invariants(s);
        const std::int64_t limit = 2 * r.conductor + s.largest();
        const auto in = oracle::members(gens_of(s), limit);

        // gap list and the stopping rule, checked on a table twice as long
        CHECK(r.gaps == oracle::gaps(gens_of(s), std::max<std::int64_t>(r.frobenius, 0)));
        for (std::int64_t n = r.conductor; n <= limit; ++n) REQUIRE(in[n]);

        // partition of [0, f]
        CHECK(r.gaps.size() + r.sporadic.size() == static_cast<std::size_t>(r.frobenius + 1));
        CHECK(r.genus == static_cast<std::int64_t>(r.gaps.size()));
        CHECK(r.conductor == r.frobenius + 1);
        CHECK(n_of_alpha(s, std::max<std::int64_t>(r.frobenius, 0)) ==
              (r.frobenius >= 0 ? r.sporadic_count_with_zero : 1));

        for (std::int64_t n = 0; n <= std::min<std::int64_t>(limit, 120); ++n) {
            const BigInt d = denumerant(s, n);
            CHECK(d == oracle::count_representations(gens_of(s), n));
            CHECK((d >= 1) == in[n]);
        }
    }
}

TEST_CASE("Sylvester for random coprime pairs") {
    std::mt19937_64 rng(5);
    for (int c = 0; c < 100; ++c) {
        const auto s = random_spec(rng, 2, 2, 2, 80);
        const auto r = invariants(s);
        CHECK(r.frobenius == s[0] * s[1] - s[0] - s[1]);
        CHECK(2 * r.genus == (s[0] - 1) * (s[1] - 1));
    }
}

}
