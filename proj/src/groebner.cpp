#include "numsg/groebner.hpp"

#include "numsg/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace numsg {

namespace {

using Buffer = std::vector<std::int64_t>;

bool lead_divides(const Binomial& g, const Buffer& m) {
    const auto lead = g.lead.values();
    for (std::size_t i = 0; i < m.size(); ++i)
        if (lead[i] > m[i]) return false;
    return true;
}

void apply_step(const Binomial& g, Buffer& m) {
    const auto lead = g.lead.values();
    const auto tail = g.tail.values();
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::int64_t out = 0;
        if (__builtin_add_overflow(m[i] - lead[i], tail[i], &out))
            throw Error(ErrorKind::Overflow, "exponent overflow during reduction");
        m[i] = out;
    }
}

// `elements` is any range of const Binomial* or const Binomial&; the first
// applicable element wins.
template <class Range, class Deref>
void reduce_buffer(const Range& elements, Deref deref, Buffer& m, std::uint64_t& fuel) {
    for (;;) {
        bool stepped = false;
        for (const auto& item : elements) {
            const Binomial& g = deref(item);
            if (lead_divides(g, m)) {
                if (fuel == 0) throw Error(ErrorKind::ResourceLimit, "reduction fuel exhausted");
                --fuel;
                apply_step(g, m);
                stepped = true;
                break;
            }
        }
        if (!stepped) return;
    }
}

Buffer to_buffer(const ExponentVector& v) { return Buffer(v.values().begin(), v.values().end()); }

struct PairKey {
    std::int64_t weight;
    ExponentVector lcm;
    std::size_t i;
    std::size_t j;

    bool operator<(const PairKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (auto c = compare(lcm, o.lcm); c != 0) return c < 0;
        return std::tie(i, j) < std::tie(o.i, o.j);
    }
};

class BuchbergerRun {
public:
    BuchbergerRun(const SemigroupSpec& spec, const BuchbergerLimits& limits) : spec_(spec), limits_(limits) {}

    std::vector<Binomial> run() {
        for (auto& g : ideal_generators(spec_)) insert_reduced(g.lead, g.tail);

        while (!pairs_.empty()) {
            PairKey key = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            ++stats_.pairs_processed;

            const Binomial& f = elements_[key.i];
            const Binomial& g = elements_[key.j];
            if (disjoint_support(f.lead, g.lead)) {
                ++stats_.product_criterion_skips;
                continue;
            }
            auto s = s_pair(f, g);
            if (!s) {
                ++stats_.zero_reductions;
                continue;
            }
            insert_reduced(s->lead, s->tail);
        }
        return finish();
    }

    const BuchbergerStats& stats() const { return stats_; }

private:
    ExponentVector normal_form(const ExponentVector& m) {
        Buffer buf = to_buffer(m);
        std::uint64_t fuel = kDefaultReductionFuel;
        reduce_buffer(active_, [this](std::size_t idx) -> const Binomial& { return elements_[idx]; }, buf, fuel);
        return ExponentVector(std::move(buf));
    }

    void insert_reduced(const ExponentVector& a, const ExponentVector& b) {
        auto h = Binomial::oriented(normal_form(a), normal_form(b));
        if (!h) {
            ++stats_.zero_reductions;
            return;
        }
        if (elements_.size() >= limits_.max_basis)
            throw Error(ErrorKind::ResourceLimit,
                        "Groebner basis exceeded " + std::to_string(limits_.max_basis) + " elements");

        const std::size_t n = elements_.size();
        for (std::size_t i : active_) {
            if (stats_.pairs_created >= limits_.max_pairs)
                throw Error(ErrorKind::ResourceLimit,
                            "Buchberger exceeded " + std::to_string(limits_.max_pairs) + " pairs");
            auto l = lcm(elements_[i].lead, h->lead);
            pairs_.insert(PairKey{weight(l, spec_.generators()), std::move(l), i, n});
            ++stats_.pairs_created;
        }
        // Elements whose lead is now divisible by the new lead no longer take
        // part in reduction or new pairs; their queued pairs stay.
        std::erase_if(active_, [&](std::size_t i) { return divides(h->lead, elements_[i].lead); });

        elements_.push_back(std::move(*h));
        active_.push_back(n);
        ++stats_.elements_added;
    }

    std::vector<Binomial> finish() {
        std::vector<Binomial> basis;
        for (std::size_t i : active_) basis.push_back(elements_[i]);

        // Minimal already (no active lead divides another), so only tails
        // need interreduction.
        for (auto& g : basis) {
            Buffer tail = to_buffer(g.tail);
            std::uint64_t fuel = kDefaultReductionFuel;
            reduce_buffer(basis, [](const Binomial& b) -> const Binomial& { return b; }, tail, fuel);
            g.tail = ExponentVector(std::move(tail));
        }
        std::sort(basis.begin(), basis.end(),
                  [](const Binomial& a, const Binomial& b) { return compare(a.lead, b.lead) > 0; });
        if (!is_reduced(basis)) throw Error(ErrorKind::InternalInconsistency, "final basis is not reduced");
        return basis;
    }

    const SemigroupSpec& spec_;
    BuchbergerLimits limits_;
    BuchbergerStats stats_;
    std::vector<Binomial> elements_;
    std::vector<std::size_t> active_;
    std::set<PairKey> pairs_;
};

} // namespace

std::optional<Binomial> Binomial::oriented(ExponentVector a, ExponentVector b, const MonomialOrder& order) {
    auto c = compare(order, a, b);
    if (c == 0) return std::nullopt;
    if (c > 0) return Binomial{std::move(a), std::move(b)};
    return Binomial{std::move(b), std::move(a)};
}

std::string Binomial::to_string() const { return lead.to_monomial_string() + " - " + tail.to_monomial_string(); }

std::vector<Binomial> ideal_generators(const SemigroupSpec& spec) {
    const std::size_t len = spec.rank() + 1;
    std::vector<Binomial> out;
    for (std::size_t i = 0; i < spec.rank(); ++i)
        out.push_back(*Binomial::oriented(ExponentVector::unit(len, i + 1), ExponentVector::unit(len, 0, spec[i])));
    return out;
}

std::optional<Binomial> s_pair(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
    const auto l = lcm(f.lead, g.lead);
    return Binomial::oriented(mul(sub(l, f.lead), f.tail), mul(sub(l, g.lead), g.tail), order);
}

ExponentVector reduce_monomial(std::span<const Binomial> basis, const ExponentVector& m, std::uint64_t fuel) {
    for (const auto& g : basis)
        if (g.lead.size() != m.size())
            throw Error(ErrorKind::LengthMismatch, "monomial and basis live in different rings");
    Buffer buf = to_buffer(m);
    reduce_buffer(basis, [](const Binomial& b) -> const Binomial& { return b; }, buf, fuel);
    return ExponentVector(std::move(buf));
}

ExponentVector GroebnerBasis::reduce(const ExponentVector& m) const {
    auto nf = reduce_monomial(elements_, m);
    if (weight(nf, spec_.generators()) != weight(m, spec_.generators()))
        throw Error(ErrorKind::InternalInconsistency, "reduction changed the weight of " + m.to_tuple_string());
    return nf;
}

GroebnerBasis buchberger(const SemigroupSpec& spec, const BuchbergerLimits& limits) {
    BuchbergerRun run(spec, limits);
    auto elements = run.run();
    return GroebnerBasis(spec, std::move(elements), run.stats());
}

ExponentVector normal_form_of_power(const GroebnerBasis& basis, std::int64_t n) {
    if (n < 0) throw Error(ErrorKind::PreconditionViolation, "normal_form_of_power needs n >= 0");
    auto nf = basis.reduce(ExponentVector::unit(basis.spec().rank() + 1, 0, n));
    if (nf[0] >= basis.spec().smallest())
        throw Error(ErrorKind::InternalInconsistency, "normal form of x^" + std::to_string(n) + " has x-degree >= a_1");
    return nf;
}

bool is_reduced(std::span<const Binomial> basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].lead == basis[i].tail) return false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (divides(basis[j].lead, basis[i].tail)) return false;
            if (i != j && divides(basis[j].lead, basis[i].lead)) return false;
        }
    }
    return true;
}

bool satisfies_buchberger_criterion(std::span<const Binomial> basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto s = s_pair(basis[i], basis[j]);
            if (!s) continue;
            if (reduce_monomial(basis, s->lead) != reduce_monomial(basis, s->tail)) return false;
        }
    return true;
}

} // namespace numsg
