// numsg: command-line front end.
//
// Exit codes: 0 ok / member, 1 gap (member only), 2 input error,
// 3 resource limit, 4 IO error, 5 internal consistency failure.

#include "numsg/bounds.hpp"
#include "numsg/document.hpp"
#include "numsg/error.hpp"
#include "numsg/groebner.hpp"
#include "numsg/reference_tables.hpp"
#include "numsg/selftest.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/staircase.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace numsg;

enum Exit : int { kOk = 0, kGap = 1, kInput = 2, kResource = 3, kIo = 4, kInternal = 5 };

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ResourceLimit:
    case ErrorKind::Overflow: return kResource;
    case ErrorKind::InternalInconsistency: return kInternal;
    default: return kInput;
    }
}

std::string join(std::span<const std::int64_t> values, const char* sep = ", ") {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
    return out.str();
}

std::string show(const BigInt& v) { return v.str(); }

struct Common {
    bool json = false;
    std::size_t max_pairs = BuchbergerLimits{}.max_pairs;

    BuchbergerLimits limits() const {
        BuchbergerLimits l;
        l.max_pairs = max_pairs;
        return l;
    }
};

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_analyze(const std::string& gens, const Common& opt) {
    const auto spec = parse_generators(gens);
    const auto inv = invariants(spec);
    const auto wilf = wilf_check(spec);
    const auto minimal = minimal_generators(spec);
    if (opt.json) {
        Json payload = to_json(inv);
        payload["minimal_generators"] = to_json(minimal);
        payload["wilf"] = to_json(wilf);
        emit(make_document("analyze", spec, std::move(payload)));
        return kOk;
    }
    std::cout << "S = " << spec.to_string() << '\n'
              << "frobenius f(S)      = " << inv.frobenius << '\n'
              << "genus g(S)          = " << inv.genus << '\n'
              << "conductor c(S)      = " << inv.conductor << '\n'
              << "multiplicity m(S)   = " << inv.multiplicity << '\n'
              << "embedding dim e(S)  = " << inv.embedding_dimension << "  minimal generators "
              << minimal.to_string() << '\n'
              << "gaps                = {" << join(inv.gaps) << "}\n"
              << "sporadic            = {" << join(inv.sporadic) << "}\n"
              << "n(S) with 0         = " << inv.sporadic_count_with_zero << '\n'
              << "n(S) without 0      = " << inv.sporadic_count_without_zero << '\n'
              << "Wilf c <= e*n       : " << wilf.conductor << " <= " << wilf.embedding_dimension << "*"
              << wilf.n_with_zero << (wilf.holds ? "  holds" : "  FAILS") << '\n';
    return kOk;
}

int cmd_member(const std::string& gens, std::int64_t n, const Common& opt) {
    const auto spec = parse_generators(gens);
    if (n < 0) throw Error(ErrorKind::PreconditionViolation, "N must be >= 0");
    const auto basis = buchberger(spec, opt.limits());
    const auto cert = certify(basis, n);
    const bool oracle = is_member(spec, n);
    const bool agree = oracle == cert.member;
    if (opt.json) {
        Json payload = to_json(cert, spec);
        payload["oracle_member"] = oracle;
        payload["cross_check"] = agree;
        emit(make_document("member", spec, std::move(payload)));
    } else {
        std::cout << n << (cert.member ? " is in " : " is a gap of ") << spec.to_string() << '\n'
                  << "normal form of x^" << n << " = " << cert.certificate.to_monomial_string() << "  "
                  << cert.certificate.to_tuple_string() << '\n'
                  << cert.decomposition(spec) << '\n'
                  << "oracle agrees: " << (agree ? "yes" : "NO") << '\n';
    }
    if (!agree) {
        std::cerr << "error: Groebner verdict disagrees with the table oracle\n";
        return kInternal;
    }
    return cert.member ? kOk : kGap;
}

int cmd_groebner(const std::string& gens, const Common& opt) {
    const auto spec = parse_generators(gens);
    const auto basis = buchberger(spec, opt.limits());
    if (opt.json) {
        emit(make_document("gb", spec, to_json(basis)));
        return kOk;
    }
    std::cout << "reduced Groebner basis of <y_i - x^a_i> for " << spec.to_string() << ", lex x > y1 > ... > y"
              << spec.rank() << " (" << basis.size() << " elements)\n";
    for (const auto& g : basis.elements()) std::cout << "  " << g.to_string() << '\n';
    std::cout << "corners:\n";
    StaircaseModel model(basis);
    std::size_t i = 0;
    for (const auto& q : model.corners()) std::cout << "  q" << ++i << " = " << q.to_tuple_string() << '\n';
    return kOk;
}

int cmd_staircase(const std::string& gens, const std::string& out_path, const Common& opt) {
    const auto spec = parse_generators(gens);
    StaircaseModel model(buchberger(spec, opt.limits()));
    const Json data = staircase_plot_data(model);

    if (out_path == "-") {
        std::cout << data.dump(2) << '\n';
        return kOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kIo;
    }
    file << data.dump(2) << '\n';
    file.close();
    if (!file) {
        std::cerr << "error: failed writing '" << out_path << "'\n";
        return kIo;
    }

    Json levels = Json::object();
    for (const auto& [level, pts] : data["gap_points"].items()) levels[level] = pts.size();
    if (opt.json) {
        Json payload;
        payload["out"] = out_path;
        payload["corners"] = data["corners"].size();
        payload["gap_points_per_level"] = levels;
        payload["element_points"] = data["element_points"].size();
        emit(make_document("staircase", spec, std::move(payload)));
    } else {
        std::cout << "wrote " << out_path << ": " << data["corners"].size() << " corners, "
                  << data["gap_values"].size() << " gap points, " << data["element_points"].size()
                  << " element points\n";
        for (const auto& [level, count] : levels.items()) std::cout << "  level x^" << level << ": " << count << '\n';
    }
    return kOk;
}

void print_report_text(const BoundReport& r) {
    std::cout << r.spec.to_string() << "  f=" << r.frobenius << "  n(S)=" << r.n_true_with_zero << " (with 0), "
              << r.n_true_without_zero << " (without 0)\n"
              << "  GLY-based bound         " << show(r.gly_bound) << "  (exact " << to_string(r.gly_bound_exact)
              << ")\n"
              << "  prism/pyramid bound     " << show(r.prism_pyramid_bound) << '\n'
              << "  simple corollary bound  " << show(r.simple_corollary_bound) << '\n';
    if (r.ratio)
        std::cout << "  bound / n(S) without 0  " << to_string(*r.ratio) << "  ~ " << std::fixed
                  << std::setprecision(3) << r.ratio->convert_to<double>() << '\n';
}

Json alpha_block(const SemigroupSpec& spec, std::int64_t alpha) {
    if (alpha < 0) throw Error(ErrorKind::PreconditionViolation, "--alpha must be >= 0");
    if (spec.rank() < 2) throw Error(ErrorKind::PreconditionViolation, "bounds need at least two generators");
    const std::int64_t a1a2 = spec[0] * spec[1];
    Json j;
    j["alpha"] = alpha;
    j["n_of_alpha"] = n_of_alpha(spec, alpha);
    j["prism_pyramid_high"] = alpha >= a1a2 ? to_json(prism_pyramid_high(spec, alpha)) : Json(nullptr);
    j["prism_pyramid_low"] = alpha <= a1a2 ? to_json(prism_pyramid_low(spec, alpha)) : Json(nullptr);
    j["simple_corollary_bound"] = alpha >= a1a2 ? to_json(simple_corollary_bound(spec, alpha)) : Json(nullptr);
    return j;
}

std::vector<SemigroupSpec> read_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::vector<SemigroupSpec> specs;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        specs.push_back(parse_generators(line));
    }
    return specs;
}

int cmd_paper_tables(const Common& opt) {
    const auto checks = check_reference_rows();
    std::size_t bound_matches = 0, errata = 0, mismatches = 0;
    for (const auto& c : checks) {
        bound_matches += c.bound_matches;
        errata += c.status == RowStatus::Erratum;
        mismatches += c.status == RowStatus::Mismatch;
    }
    if (opt.json) {
        Json rows = Json::array();
        for (const auto& c : checks) rows.push_back(to_json(c));
        Json payload;
        payload["rows"] = std::move(rows);
        payload["summary"] = {{"rows", checks.size()},
                              {"bound_matches", bound_matches},
                              {"errata", errata},
                              {"mismatches", mismatches}};
        emit(make_document("bounds", Json(nullptr), std::move(payload)));
    } else {
        std::cout << "tbl  generators              f(pr/ok)   n(pr/ok)  bound(pr/ok)  status\n";
        for (const auto& c : checks) {
            std::ostringstream gens;
            gens << '{' << join(c.row.generators, ",") << '}';
            std::cout << "  " << c.row.table << "  " << std::left << std::setw(22) << gens.str() << std::right
                      << std::setw(5) << c.row.frobenius << "/" << std::left << std::setw(5) << c.report.frobenius
                      << std::right << std::setw(4) << c.row.n << "/" << std::left << std::setw(5)
                      << c.report.n_true_without_zero << std::right << std::setw(6) << c.row.bound << "/"
                      << std::left << std::setw(7) << show(c.report.gly_bound) << std::right << to_string(c.status)
                      << (c.status == RowStatus::Erratum && c.bound_matches ? " (bound reproduced)" : "") << '\n';
        }
        std::cout << bound_matches << "/" << checks.size() << " printed bounds reproduced, " << errata
                  << " rows flagged as errata, " << mismatches << " mismatches\n";
    }
    return mismatches == 0 ? kOk : kInternal;
}

int cmd_bounds(const std::string& gens, const std::string& batch, std::optional<std::int64_t> alpha,
               bool paper_tables, const Common& opt) {
    if (paper_tables) return cmd_paper_tables(opt);

    std::vector<SemigroupSpec> specs;
    if (!batch.empty()) {
        try {
            specs = read_batch(batch);
        } catch (const std::ios_base::failure& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kIo;
        }
    }
    if (!gens.empty()) specs.insert(specs.begin(), parse_generators(gens));
    if (specs.empty()) throw Error(ErrorKind::EmptyInput, "bounds needs generators, --batch FILE or --paper-tables");

    const auto reports = bound_table(specs);
    if (opt.json) {
        Json rows = Json::array();
        for (const auto& r : reports) {
            Json row = to_json(r);
            if (alpha) row["at_alpha"] = alpha_block(r.spec, *alpha);
            rows.push_back(std::move(row));
        }
        Json spec_field = specs.size() == 1 ? to_json(specs[0]) : Json(nullptr);
        emit(make_document("bounds", spec_field, Json{{"reports", std::move(rows)}}));
        return kOk;
    }
    for (const auto& r : reports) {
        print_report_text(r);
        if (alpha) {
            const Json a = alpha_block(r.spec, *alpha);
            std::cout << "  at alpha = " << *alpha << ": n(S,alpha) = " << a["n_of_alpha"].dump();
            if (!a["prism_pyramid_high"].is_null())
                std::cout << ", prism/pyramid bound " << a["prism_pyramid_high"].dump() << ", simple corollary "
                          << a["simple_corollary_bound"].dump();
            if (!a["prism_pyramid_low"].is_null())
                std::cout << ", low-range bound " << a["prism_pyramid_low"].dump();
            std::cout << '\n';
        }
    }
    return kOk;
}

int cmd_selftest(std::uint64_t seed, std::size_t cases, const std::string& fault, const Common& opt) {
    SelftestOptions so;
    so.seed = seed;
    so.cases = cases;
    so.inject_fault = fault;
    const auto report = run_selftest(so);
    if (opt.json) {
        Json results = Json::array();
        for (const auto& r : report.results)
            results.push_back({{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
        emit(make_document("selftest", Json(nullptr),
                           Json{{"seed", seed}, {"cases", cases}, {"results", std::move(results)}}));
    } else {
        for (const auto& r : report.results)
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checks << " checks)"
                      << (r.passed ? "" : ": " + r.detail) << '\n';
    }
    if (const auto* bad = report.first_failure()) {
        std::cerr << "selftest failed: " << bad->name << '\n';
        return kInternal;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical semigroup invariants via Groebner bases of <y_i - x^a_i>"};
    app.require_subcommand(1);

    Common opt;
    auto add_common = [&](CLI::App* sub, bool groebner) {
        sub->add_flag("--json", opt.json, "Emit a JSON document");
        if (groebner) sub->add_option("--max-pairs", opt.max_pairs, "Cap on Buchberger pairs");
    };

    std::string gens, out_path, batch, fault;
    std::int64_t n = 0;
    std::optional<std::int64_t> alpha;
    bool paper_tables = false;
    std::uint64_t seed = SelftestOptions{}.seed;
    std::size_t cases = SelftestOptions{}.cases;

    auto* analyze = app.add_subcommand("analyze", "Invariants of <a_1,...,a_k>");
    analyze->add_option("generators", gens, "Comma-separated generators, e.g. 5,7")->required();
    add_common(analyze, false);

    auto* member = app.add_subcommand("member", "Certified membership of N (exit 0 member, 1 gap)");
    member->add_option("generators", gens, "Comma-separated generators")->required();
    member->add_option("N", n, "Integer to test")->required();
    add_common(member, true);

    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis and its corners");
    gb->add_option("generators", gens, "Comma-separated generators")->required();
    add_common(gb, true);

    auto* stair = app.add_subcommand("staircase", "Write staircase plot data as JSON");
    stair->add_option("generators", gens, "Comma-separated generators")->required();
    stair->add_option("--out", out_path, "Output path ('-' for stdout)")->required();
    add_common(stair, true);

    auto* bounds = app.add_subcommand("bounds", "Upper bounds on n(S) and n(S,alpha)");
    bounds->add_option("generators", gens, "Comma-separated generators");
    bounds->add_option("--batch", batch, "File with one generator list per line ('#' comments)");
    bounds->add_option("--alpha", alpha, "Also evaluate the n(S,alpha) bounds at this alpha");
    bounds->add_flag("--paper-tables", paper_tables, "Recompute the 32 published accuracy-table rows");
    add_common(bounds, false);

    auto* self = app.add_subcommand("selftest", "Randomized oracle cross-checks");
    self->add_option("--seed", seed, "RNG seed");
    self->add_option("--cases", cases, "Cases per property");
    self->add_option("--inject-fault", fault, "Corrupt one property's check (negative control)")
        ->group("");
    add_common(self, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*analyze) return cmd_analyze(gens, opt);
        if (*member) return cmd_member(gens, n, opt);
        if (*gb) return cmd_groebner(gens, opt);
        if (*stair) return cmd_staircase(gens, out_path, opt);
        if (*bounds) return cmd_bounds(gens, batch, alpha, paper_tables, opt);
        if (*self) return cmd_selftest(seed, cases, fault, opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << " [" << to_string(e.kind()) << "]\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kInput;
}
