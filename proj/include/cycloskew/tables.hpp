#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloskew/diffsets.hpp"

namespace cycloskew {

inline constexpr std::uint64_t kMaxTableBound = 100000000;

struct TableRow {
    std::uint64_t q = 0;
    std::string representation;
    Params params;
    bool oracle_verified = false;
    bool trivial = false;
    std::optional<bool> complement_law;
    std::string note;
};

struct ExpectedRow {
    std::uint64_t q;
    const char* representation;
    std::int64_t k, lambda, mu;
};

struct TableReport {
    int table = 0;
    std::uint64_t bound = 0;
    std::vector<TableRow> rows;
    /// Disagreements with the reference rows, and failed certifications.
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

/// Published rows: q < 10^4 for the order-4 table, q < 10^8 for the ell = d^2 + 2 table.
const std::vector<ExpectedRow>& expected_table1();
const std::vector<ExpectedRow>& expected_table2();

/// Skew Paley PDSs C_0^4 ∪ C_3^4 / C_0^4 ∪ C_1^4 for q <= bound with t = ±2.
/// Rows with q <= oracle_cap are certified; trivial ones (q = 5) are dropped.
TableReport table1(std::uint64_t bound, std::uint64_t oracle_cap = 10000, unsigned jobs = 0);

/// Skew Paley PDSs C_0^8 ∪ C_1^8 ∪ C_2^8 ∪ C_5^8 for q = ell^2 <= bound, ell = d^2 + 2.
TableReport table2(std::uint64_t bound, std::uint64_t oracle_cap = 100000, unsigned jobs = 0);

std::string format_row(const TableRow& row);

}  // namespace cycloskew
