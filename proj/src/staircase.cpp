#include "numsg/staircase.hpp"

#include "numsg/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace numsg {

namespace {

struct LexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return compare(a, b) < 0; }
};

// Breadth-first walk over standard points reachable from `seeds` by raising
// one y-coordinate at a time, subject to `admit`. Downward closure of the
// standard set makes this exhaustive.
template <class Admit>
std::vector<ExponentVector> walk(const StaircaseModel& model, std::vector<ExponentVector> seeds, Admit admit,
                                 std::int64_t max_points) {
    std::set<ExponentVector, LexLess> seen;
    std::deque<ExponentVector> frontier;
    for (auto& s : seeds)
        if (model.is_standard(s) && admit(s) && seen.insert(s).second) frontier.push_back(s);

    while (!frontier.empty()) {
        ExponentVector p = std::move(frontier.front());
        frontier.pop_front();
        for (std::size_t j = 1; j < p.size(); ++j) {
            std::vector<std::int64_t> raised(p.values().begin(), p.values().end());
            ++raised[j];
            ExponentVector q(std::move(raised));
            if (!model.is_standard(q) || !admit(q) || seen.contains(q)) continue;
            if (static_cast<std::int64_t>(seen.size()) >= max_points)
                throw Error(ErrorKind::InternalInconsistency, "standard-monomial walk did not stay finite");
            seen.insert(q);
            frontier.push_back(std::move(q));
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

StaircaseModel::StaircaseModel(const GroebnerBasis& basis) : spec_(basis.spec()), order_(basis.order()) {
    for (const auto& g : basis.elements()) corners_.push_back(g.lead);
    std::sort(corners_.begin(), corners_.end(), LexLess{});
}

bool StaircaseModel::is_standard(const ExponentVector& p) const {
    if (p.size() != spec_.rank() + 1)
        throw Error(ErrorKind::LengthMismatch, "point " + p.to_tuple_string() + " has the wrong length");
    return std::none_of(corners_.begin(), corners_.end(), [&](const ExponentVector& q) { return divides(q, p); });
}

std::map<std::int64_t, std::vector<ExponentVector>> gap_points(const StaircaseModel& model) {
    const auto& spec = model.spec();
    const std::size_t len = spec.rank() + 1;
    std::vector<ExponentVector> seeds;
    // (a_1, 0, ..., 0) is always a corner, so x-levels stop below a_1.
    for (std::int64_t s0 = 1; s0 < spec.smallest(); ++s0) seeds.push_back(ExponentVector::unit(len, 0, s0));

    // Each point maps to a distinct gap, and gaps are bounded by Schur.
    const std::int64_t cap = std::max<std::int64_t>(frobenius_upper_bound(spec), 0) + 1;
    auto points = walk(model, std::move(seeds), [](const ExponentVector&) { return true; }, cap);

    std::map<std::int64_t, std::vector<ExponentVector>> levels;
    for (auto& p : points) levels[p[0]].push_back(std::move(p));
    return levels;
}

std::vector<ExponentVector> element_points(const StaircaseModel& model, std::int64_t alpha) {
    if (alpha < 0) throw Error(ErrorKind::PreconditionViolation, "element enumeration needs alpha >= 0");
    const auto gens = model.spec().generators();
    auto within = [&](const ExponentVector& p) { return weight(p, gens) <= alpha; };
    auto points = walk(model, {ExponentVector::zero(model.spec().rank() + 1)}, within, alpha + 1);
    std::sort(points.begin(), points.end(), [&](const ExponentVector& a, const ExponentVector& b) {
        return weight(a, gens) < weight(b, gens);
    });
    return points;
}

namespace {

std::vector<std::int64_t> weights_checked(const std::vector<ExponentVector>& points, std::span<const std::int64_t> gens) {
    std::vector<std::int64_t> values;
    values.reserve(points.size());
    for (const auto& p : points) values.push_back(weight(p, gens));
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw Error(ErrorKind::InternalInconsistency, "two standard points share a value");
    return values;
}

} // namespace

std::vector<std::int64_t> gaps_via_staircase(const StaircaseModel& model) {
    std::vector<ExponentVector> all;
    for (auto& [level, pts] : gap_points(model)) all.insert(all.end(), pts.begin(), pts.end());
    return weights_checked(all, model.spec().generators());
}

std::vector<std::int64_t> elements_via_staircase(const StaircaseModel& model, std::int64_t alpha) {
    return weights_checked(element_points(model, alpha), model.spec().generators());
}

std::string CertifiedMembership::decomposition(const SemigroupSpec& spec) const {
    std::ostringstream out;
    out << n << " =";
    bool first = true;
    auto term = [&](const std::string& t) {
        out << (first ? " " : " + ") << t;
        first = false;
    };
    if (certificate[0] > 0) term(std::to_string(certificate[0]));
    for (std::size_t i = 1; i < certificate.size(); ++i)
        if (certificate[i] > 0) term(std::to_string(certificate[i]) + "*" + std::to_string(spec[i - 1]));
    if (first) out << " 0";
    return out.str();
}

CertifiedMembership certify(const GroebnerBasis& basis, std::int64_t n) {
    CertifiedMembership c;
    c.n = n;
    c.certificate = normal_form_of_power(basis, n);
    c.member = c.certificate[0] == 0;
    if (weight(c.certificate, basis.spec().generators()) != n)
        throw Error(ErrorKind::InternalInconsistency, "certificate does not decompose " + std::to_string(n));
    return c;
}

} // namespace numsg
