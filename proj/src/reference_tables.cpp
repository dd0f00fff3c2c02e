#include "numsg/reference_tables.hpp"

namespace numsg {

namespace {

const std::vector<ReferenceRow>& rows() {
    static const std::vector<ReferenceRow> table = {
        {1, {5, 6, 11}, 19, 8, 19, "2.375"},
        {1, {5, 6, 19}, 14, 5, 10, "2.000"},
        {1, {5, 7, 16}, 18, 8, 14, "1.750"},
        {1, {5, 7, 23}, 18, 7, 13, "1.857"},
        {1, {6, 9, 20}, 43, 21, 44, "2.095"},
        {1, {7, 9, 38}, 40, 18, 28, "1.555"},
        {1, {7, 9, 40}, 38, 16, 26, "1.625"},
        {1, {7, 9, 47}, 40, 17, 28, "1.647"},
        {1, {7, 48, 50}, 143, 62, 94, "1.516"},
        {1, {8, 9, 47}, 46, 20, 31, "1.550"},
        {1, {8, 9, 55}, 47, 20, 32, "1.600"},
        {1, {9, 10, 53}, 61, 28, 42, "1.500"},
        {2, {7, 11, 34, 37}, 38, 14, 50, "3.571"},
        {2, {7, 11, 23, 24}, 27, 8, 31, "3.875"},
        {2, {7, 11, 23, 17}, 31, 11, 38, "3.454"},
        {2, {11, 25, 37, 56}, 101, 40, 110, "2.750"},
        {2, {11, 25, 37, 115}, 104, 42, 120, "2.857"},
        {2, {11, 25, 37, 104}, 101, 40, 111, "2.775"},
        {2, {9, 13, 19, 21}, 33, 10, 35, "3.500"},
        {2, {9, 10, 21, 35}, 43, 18, 59, "3.277"},
        {2, {8, 11, 13, 15}, 25, 8, 31, "3.875"},
        {2, {13, 15, 31, 63}, 81, 34, 94, "2.764"},
        {2, {13, 16, 33, 56}, 86, 34, 98, "2.882"},
        {2, {13, 15, 31, 63}, 81, 34, 94, "2.764"},
        {3, {7, 11, 31, 34, 37}, 30, 9, 86, "9.555"},
        {3, {7, 15, 18, 26, 34}, 38, 17, 112, "6.588"},
        {3, {9, 10, 21, 35, 43}, 34, 11, 99, "9.000"},
        {3, {10, 19, 31, 37, 54}, 65, 25, 154, "6.160"},
        {3, {8, 11, 13, 15, 20}, 25, 11, 72, "6.545"},
        {3, {8, 11, 13, 15, 25}, 20, 6, 53, "8.833"},
        {3, {10, 19, 31, 37, 54, 65}, 63, 24, 366, "15.250"},
        {3, {10, 19, 31, 37, 54, 63}, 65, 26, 382, "14.692"},
    };
    return table;
}

} // namespace

std::span<const ReferenceRow> reference_rows() { return rows(); }

const char* to_string(RowStatus status) noexcept {
    switch (status) {
    case RowStatus::Match: return "match";
    case RowStatus::Erratum: return "erratum";
    case RowStatus::Mismatch: return "mismatch";
    }
    return "unknown";
}

RowCheck check_row(const ReferenceRow& row, const BoundReport& report) {
    RowCheck c{row, report};
    c.frobenius_confirmed = report.frobenius == row.frobenius;
    c.n_confirmed = report.n_true_without_zero == row.n;
    c.bound_matches = report.gly_bound == row.bound;
    if (!c.frobenius_confirmed || !c.n_confirmed) c.status = RowStatus::Erratum;
    else c.status = c.bound_matches ? RowStatus::Match : RowStatus::Mismatch;
    return c;
}

std::vector<RowCheck> check_reference_rows() {
    std::vector<SemigroupSpec> specs;
    for (const auto& row : rows()) specs.push_back(normalize(row.generators));
    auto reports = bound_table(specs);
    std::vector<RowCheck> out;
    for (std::size_t i = 0; i < reports.size(); ++i) out.push_back(check_row(rows()[i], reports[i]));
    return out;
}

} // namespace numsg
