#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qlcm/bounds.hpp"
#include "qlcm/verifier.hpp"

namespace qlcm {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

// Empty cells (std::monostate) print as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<Cell>> rows;
};

// Doubles are rounded to six decimals so reports stay byte-stable.
double display_round(double value);

std::string cell_text(const Cell& cell);

void write_csv(std::ostream& os, const Table& table);
void write_text(std::ostream& os, const Table& table);
// Array of objects keyed by the headers.
Json to_json(const Table& table);

// Splits a CSV produced by write_csv back into header and rows.
Table parse_csv(const std::string& text);

Json to_json(const BoundCertificate& cert);
std::vector<std::string> certificate_csv_header();
std::vector<Cell> certificate_csv_row(const BoundCertificate& cert);

Table records_table(const std::vector<SweepRecord>& records);
Json to_json(const SweepRecord& record);
Json to_json(const Counterexample& c);
Json to_json(const SweepSummary& summary);
Json to_json(const SweepResult& result);

// "<checked> checked, <skipped> skipped (gcd)" plus per-suite tallies.
void write_summary_text(std::ostream& os, const SweepSummary& summary);

}  // namespace qlcm
