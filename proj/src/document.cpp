#include "numsg/document.hpp"

#include "numsg/error.hpp"

namespace numsg {

Json make_document(const std::string& command, const Json& spec, Json payload) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["spec"] = spec;
    doc["payload"] = std::move(payload);
    return doc;
}

Json make_document(const std::string& command, const SemigroupSpec& spec, Json payload) {
    return make_document(command, to_json(spec), std::move(payload));
}

Json to_json(const BigInt& v) {
    if (auto small = to_int64(v)) return *small;
    return v.str();
}

Json to_json(const Rational& v) { return to_string(v); }

Json to_json(const ExponentVector& v) { return Json(std::vector<std::int64_t>(v.values().begin(), v.values().end())); }

Json to_json(const SemigroupSpec& s) {
    return Json(std::vector<std::int64_t>(s.generators().begin(), s.generators().end()));
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["frobenius"] = r.frobenius;
    j["genus"] = r.genus;
    j["conductor"] = r.conductor;
    j["multiplicity"] = r.multiplicity;
    j["embedding_dimension"] = r.embedding_dimension;
    j["gaps"] = r.gaps;
    j["sporadic"] = r.sporadic;
    j["sporadic_count_with_zero"] = r.sporadic_count_with_zero;
    j["sporadic_count_without_zero"] = r.sporadic_count_without_zero;
    return j;
}

InvariantReport invariant_report_from_json(const Json& j) {
    InvariantReport r;
    r.frobenius = j.at("frobenius").get<std::int64_t>();
    r.genus = j.at("genus").get<std::int64_t>();
    r.conductor = j.at("conductor").get<std::int64_t>();
    r.multiplicity = j.at("multiplicity").get<std::int64_t>();
    r.embedding_dimension = j.at("embedding_dimension").get<std::int64_t>();
    r.gaps = j.at("gaps").get<std::vector<std::int64_t>>();
    r.sporadic = j.at("sporadic").get<std::vector<std::int64_t>>();
    r.sporadic_count_with_zero = j.at("sporadic_count_with_zero").get<std::int64_t>();
    r.sporadic_count_without_zero = j.at("sporadic_count_without_zero").get<std::int64_t>();
    return r;
}

ExponentVector exponent_vector_from_json(const Json& j) {
    return ExponentVector(j.get<std::vector<std::int64_t>>());
}

Json to_json(const WilfReport& w) {
    Json j;
    j["conductor"] = w.conductor;
    j["embedding_dimension"] = w.embedding_dimension;
    j["n_with_zero"] = w.n_with_zero;
    j["holds"] = w.holds;
    return j;
}

Json to_json(const CertifiedMembership& c, const SemigroupSpec& spec) {
    Json j;
    j["n"] = c.n;
    j["member"] = c.member;
    j["certificate"] = to_json(c.certificate);
    j["normal_form"] = c.certificate.to_monomial_string();
    j["decomposition"] = c.decomposition(spec);
    return j;
}

Json to_json(const GroebnerBasis& basis) {
    Json elements = Json::array();
    for (const auto& g : basis.elements()) {
        Json e;
        e["binomial"] = g.to_string();
        e["lead"] = to_json(g.lead);
        e["tail"] = to_json(g.tail);
        elements.push_back(std::move(e));
    }
    StaircaseModel model(basis);
    Json corners = Json::array();
    for (const auto& q : model.corners()) corners.push_back(to_json(q));

    Json j;
    j["order"] = "lex x > y1 > ... > yk";
    j["size"] = basis.size();
    j["elements"] = std::move(elements);
    j["corners"] = std::move(corners);
    const auto& st = basis.stats();
    j["stats"] = {{"pairs_created", st.pairs_created},
                  {"pairs_processed", st.pairs_processed},
                  {"product_criterion_skips", st.product_criterion_skips},
                  {"zero_reductions", st.zero_reductions},
                  {"elements_added", st.elements_added}};
    return j;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["generators"] = to_json(r.spec);
    j["frobenius"] = r.frobenius;
    j["n_with_zero"] = r.n_true_with_zero;
    j["n_without_zero"] = r.n_true_without_zero;
    j["gly_bound_exact"] = to_json(r.gly_bound_exact);
    j["gly_bound"] = to_json(r.gly_bound);
    j["prism_pyramid_bound"] = to_json(r.prism_pyramid_bound);
    j["simple_corollary_bound"] = to_json(r.simple_corollary_bound);
    j["ratio"] = r.ratio ? to_json(*r.ratio) : Json(nullptr);
    return j;
}

Json to_json(const RowCheck& c) {
    Json j;
    j["table"] = c.row.table;
    j["printed"] = {{"generators", c.row.generators},
                    {"frobenius", c.row.frobenius},
                    {"n", c.row.n},
                    {"bound", c.row.bound},
                    {"ratio", c.row.ratio}};
    j["computed"] = to_json(c.report);
    j["frobenius_confirmed"] = c.frobenius_confirmed;
    j["n_confirmed"] = c.n_confirmed;
    j["bound_matches"] = c.bound_matches;
    j["status"] = to_string(c.status);
    return j;
}

Json staircase_plot_data(const StaircaseModel& model) {
    const auto& spec = model.spec();
    const auto inv = invariants(spec);

    Json corners = Json::array();
    for (const auto& q : model.corners()) corners.push_back(to_json(q));

    Json levels = Json::object();
    for (const auto& [level, pts] : gap_points(model)) {
        Json arr = Json::array();
        for (const auto& p : pts) arr.push_back(to_json(p));
        levels[std::to_string(level)] = std::move(arr);
    }

    Json elements = Json::array();
    for (const auto& p : element_points(model, inv.conductor)) elements.push_back(to_json(p));

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["generators"] = to_json(spec);
    doc["corners"] = std::move(corners);
    doc["gap_points"] = std::move(levels);
    doc["element_points"] = std::move(elements);
    doc["gap_values"] = gaps_via_staircase(model);
    doc["element_values"] = elements_via_staircase(model, inv.conductor);
    return doc;
}

} // namespace numsg
