#pragma once

// The three published accuracy tables for the GLY-based bound (32 rows,
// generators exactly as printed, including one duplicated row), and the
// machinery to recompute each row and classify it.

#include "numsg/bounds.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace numsg {

struct ReferenceRow {
    int table = 0;  // 1, 2 or 3
    std::vector<std::int64_t> generators;
    std::int64_t frobenius = 0;
    std::int64_t n = 0;  // printed n(S): counts elements without 0
    std::int64_t bound = 0;
    std::string ratio;  // as printed, e.g. "2.375"
};

std::span<const ReferenceRow> reference_rows();

enum class RowStatus {
    Match,     // f, n and bound all reproduce
    Erratum,   // the printed f or n is contradicted by the oracle
    Mismatch,  // f and n confirmed but the bound differs: a real failure
};

const char* to_string(RowStatus status) noexcept;

struct RowCheck {
    ReferenceRow row;
    BoundReport report;
    bool frobenius_confirmed = false;
    bool n_confirmed = false;
    bool bound_matches = false;
    RowStatus status = RowStatus::Mismatch;
};

RowCheck check_row(const ReferenceRow& row, const BoundReport& report);
std::vector<RowCheck> check_reference_rows();

} // namespace numsg
