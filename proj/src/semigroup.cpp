#include "numsg/semigroup.hpp"

#include "numsg/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace numsg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorKind::ResourceLimit, "generators too large for table-based invariants");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorKind::ResourceLimit, "generators too large for table-based invariants");
    return out;
}

} // namespace

std::string SemigroupSpec::to_string() const {
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < gens_.size(); ++i) out << (i ? "," : "") << gens_[i];
    out << '>';
    return out.str();
}

SemigroupSpec normalize(std::span<const std::int64_t> raw) {
    if (raw.empty()) throw Error(ErrorKind::EmptyInput, "generator list is empty");
    for (std::int64_t a : raw)
        if (a <= 0)
            throw Error(ErrorKind::NonPositiveGenerator,
                        "generator " + std::to_string(a) + " is not positive", a);

    std::vector<std::int64_t> gens(raw.begin(), raw.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t d = 0;
    for (std::int64_t a : gens) d = std::gcd(d, a);
    if (d != 1)
        throw Error(ErrorKind::GcdNotOne,
                    "generators are not coprime: gcd = " + std::to_string(d), d);
    return SemigroupSpec(std::move(gens));
}

SemigroupSpec parse_generators(const std::string& text) {
    std::vector<std::int64_t> raw;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::string trimmed;
        for (char c : token)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty())
            throw Error(ErrorKind::ParseError, "empty entry in generator list '" + text + "'");
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(trimmed, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "'" + trimmed + "' is not an integer");
        }
        if (pos != trimmed.size())
            throw Error(ErrorKind::ParseError, "'" + trimmed + "' is not an integer");
        raw.push_back(v);
    }
    return normalize(raw);
}

std::int64_t frobenius_upper_bound(const SemigroupSpec& s) {
    if (s.is_everything()) return -1;
    return checked_mul(s.smallest() - 1, s.largest() - 1) - 1;
}

std::vector<char> membership_table(const SemigroupSpec& s, std::int64_t limit) {
    if (limit < 0) return {};
    if (limit >= max_table_entries())
        throw Error(ErrorKind::ResourceLimit,
                    "membership table of " + std::to_string(limit) + " entries exceeds the cap");
    std::vector<char> r(static_cast<std::size_t>(limit) + 1, 0);
    r[0] = 1;
    for (std::int64_t n = 1; n <= limit; ++n)
        for (std::int64_t a : s.generators())
            if (a <= n && r[n - a]) {
                r[n] = 1;
                break;
            }
    return r;
}

bool is_member(const SemigroupSpec& s, std::int64_t n) {
    if (n < 0) throw Error(ErrorKind::PreconditionViolation, "is_member needs n >= 0");
    if (n > frobenius_upper_bound(s)) return true;
    return membership_table(s, n)[n] != 0;
}

InvariantReport invariants(const SemigroupSpec& s) {
    InvariantReport rep;
    if (s.is_everything()) return rep;

    const std::int64_t a1 = s.smallest();
    // Once a_1 consecutive members are seen, adding a_1 covers every later
    // integer. The Schur bound caps where that run can start.
    const std::int64_t guard = checked_add(frobenius_upper_bound(s), checked_add(a1, 1));
    if (guard >= max_table_entries())
        throw Error(ErrorKind::ResourceLimit, "generators too large for table-based invariants");

    std::vector<char> r;
    r.reserve(static_cast<std::size_t>(guard) + 1);
    std::int64_t run = 0;
    std::int64_t conductor = -1;
    for (std::int64_t n = 0; n <= guard; ++n) {
        char member = n == 0;
        for (std::int64_t a : s.generators())
            if (a <= n && r[n - a]) {
                member = 1;
                break;
            }
        r.push_back(member);
        run = member ? run + 1 : 0;
        if (run == a1) {
            conductor = n - a1 + 1;
            break;
        }
    }
    if (conductor < 0) throw Error(ErrorKind::ResourceLimit, "conductor not found below the Schur bound");

    rep.conductor = conductor;
    rep.frobenius = conductor - 1;
    for (std::int64_t n = 0; n < conductor; ++n) {
        if (r[n]) rep.sporadic.push_back(n);
        else rep.gaps.push_back(n);
    }
    rep.genus = static_cast<std::int64_t>(rep.gaps.size());
    rep.multiplicity = a1;
    rep.embedding_dimension = static_cast<std::int64_t>(minimal_generators(s).rank());
    rep.sporadic_count_with_zero = static_cast<std::int64_t>(rep.sporadic.size());
    rep.sporadic_count_without_zero = rep.sporadic_count_with_zero - 1;
    return rep;
}

std::int64_t n_of_alpha(const SemigroupSpec& s, std::int64_t alpha) {
    if (alpha < 0) throw Error(ErrorKind::PreconditionViolation, "n_of_alpha needs alpha >= 0");
    const std::int64_t f_bound = frobenius_upper_bound(s);
    const std::int64_t limit = std::min(alpha, std::max<std::int64_t>(f_bound, 0));
    auto table = membership_table(s, limit);
    std::int64_t count = std::count(table.begin(), table.end(), char{1});
    return count + (alpha - limit);
}

namespace {

// Representations using gens[0..=idx] summing to `rest`; gens[0] is settled
// by divisibility.
BigInt count_representations(std::span<const std::int64_t> gens, std::size_t idx, std::int64_t rest) {
    if (idx == 0) return rest % gens[0] == 0 ? 1 : 0;
    BigInt total = 0;
    for (std::int64_t used = 0; used <= rest; used += gens[idx])
        total += count_representations(gens, idx - 1, rest - used);
    return total;
}

} // namespace

BigInt denumerant(const SemigroupSpec& s, std::int64_t n) {
    if (n < 0) throw Error(ErrorKind::PreconditionViolation, "denumerant needs n >= 0");
    return count_representations(s.generators(), s.rank() - 1, n);
}

SemigroupSpec minimal_generators(const SemigroupSpec& s) {
    const std::int64_t top = s.largest();
    std::vector<char> reach(static_cast<std::size_t>(top) + 1, 0);
    reach[0] = 1;
    std::vector<std::int64_t> kept;
    for (std::int64_t a : s.generators()) {
        if (reach[a]) continue;
        kept.push_back(a);
        for (std::int64_t n = a; n <= top; ++n)
            if (reach[n - a]) reach[n] = 1;
    }
    return normalize(kept);
}

WilfReport wilf_check(const SemigroupSpec& s) {
    const auto inv = invariants(s);
    WilfReport w;
    w.conductor = inv.conductor;
    w.embedding_dimension = inv.embedding_dimension;
    w.n_with_zero = inv.sporadic_count_with_zero;
    w.holds = w.conductor <= w.embedding_dimension * w.n_with_zero;
    return w;
}

} // namespace numsg
