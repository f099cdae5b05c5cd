#include "qlcm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace qlcm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json cell_json(const Cell& cell) {
  return std::visit(overloaded{[](std::monostate) { return Json(nullptr); },
                               [](std::int64_t v) { return Json(v); },
                               [](double v) { return Json(display_round(v)); },
                               [](bool v) { return Json(v); },
                               [](const std::string& v) { return Json(v); }},
                    cell);
}

Cell optional_cell(const std::optional<std::int64_t>& v) { return v ? Cell{*v} : Cell{}; }
Cell optional_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

}  // namespace

double display_round(double value) {
  const double rounded = std::round(value * 1e6) / 1e6;
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string cell_text(const Cell& cell) {
  return std::visit(overloaded{[](std::monostate) { return std::string(); },
                               [](std::int64_t v) { return std::to_string(v); },
                               [](double v) {
                                 char buf[64];
                                 std::snprintf(buf, sizeof buf, "%.6f", display_round(v));
                                 return std::string(buf);
                               },
                               [](bool v) { return std::string(v ? "true" : "false"); },
                               [](const std::string& v) { return v; }},
                    cell);
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.headers.size(); ++i) os << (i ? "," : "") << table.headers[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

void write_text(std::ostream& os, const Table& table) {
  std::vector<std::size_t> width(table.headers.size());
  for (std::size_t i = 0; i < table.headers.size(); ++i) width[i] = table.headers[i].size();
  std::vector<std::vector<std::string>> text;
  text.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    auto& line = text.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    os << '\n';
  };
  emit(table.headers);
  for (const auto& line : text) emit(line);
}

Json to_json(const Table& table) {
  Json out = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.headers[i]] = cell_json(row[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

Table parse_csv(const std::string& text) {
  Table table;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (header) {
      table.headers = std::move(fields);
      header = false;
    } else {
      std::vector<Cell> row;
      for (auto& f : fields) row.emplace_back(std::move(f));
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

Json to_json(const BoundCertificate& cert) {
  Json out;
  out["kind"] = std::string(to_string(cert.kind));
  out["n"] = cert.n;
  out["q"] = cert.q;
  out["r"] = cert.r;
  out["u0"] = cert.u0;
  out["holds"] = cert.holds;
  out["slack_log2"] = display_round(cert.slack_log2);
  out["lhs4"] = to_decimal(cert.lhs4);
  out["rhs4"] = to_decimal(cert.rhs4);
  return out;
}

std::vector<std::string> certificate_csv_header() {
  return {"kind", "n", "q", "r", "u0", "holds", "slack_log2", "lhs4", "rhs4"};
}

std::vector<Cell> certificate_csv_row(const BoundCertificate& cert) {
  return {std::string(to_string(cert.kind)), cert.n, cert.q, cert.r, cert.u0, cert.holds, cert.slack_log2,
          to_decimal(cert.lhs4), to_decimal(cert.rhs4)};
}

Table records_table(const std::vector<SweepRecord>& records) {
  Table table;
  table.headers = {"q", "r", "u0", "n", "lcm_bits", "k_n", "ell_n"};
  for (BoundKind kind : kAllBoundKinds) table.headers.emplace_back(to_string(kind));
  table.headers.emplace_back("slack_log2");
  for (const SweepRecord& rec : records) {
    std::vector<Cell> row{rec.q, rec.r, rec.u0, rec.n, static_cast<std::int64_t>(rec.lcm_bits), optional_cell(rec.k_n),
                          optional_cell(rec.ell_n)};
    for (BoundKind kind : kAllBoundKinds) {
      const auto it = rec.verdicts.find(kind);
      row.push_back(it == rec.verdicts.end() ? Cell{} : Cell{it->second});
    }
    row.push_back(optional_cell(rec.slack_log2));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Json to_json(const SweepRecord& rec) {
  Json out;
  out["q"] = rec.q;
  out["r"] = rec.r;
  out["u0"] = rec.u0;
  out["n"] = rec.n;
  out["lcm_bits"] = rec.lcm_bits;
  out["k_n"] = rec.k_n ? Json(*rec.k_n) : Json(nullptr);
  out["ell_n"] = rec.ell_n ? Json(*rec.ell_n) : Json(nullptr);
  Json verdicts = Json::object();
  for (BoundKind kind : kAllBoundKinds) {
    const auto it = rec.verdicts.find(kind);
    if (it != rec.verdicts.end()) verdicts[std::string(to_string(kind))] = it->second;
  }
  out["verdicts"] = std::move(verdicts);
  out["slack_log2"] = rec.slack_log2 ? Json(display_round(*rec.slack_log2)) : Json(nullptr);
  return out;
}

Json to_json(const Counterexample& c) {
  Json out;
  out["suite"] = std::string(to_string(c.suite));
  out["q"] = c.q;
  out["r"] = c.r;
  out["u0"] = c.u0;
  out["limit"] = c.limit;
  out["detail"] = c.detail;
  return out;
}

Json to_json(const SweepSummary& summary) {
  Json out;
  out["checked"] = summary.checked;
  out["skipped_gcd"] = summary.skipped_gcd;
  out["failures"] = summary.failures;
  Json suites = Json::object();
  for (Suite suite : kAllSuites) {
    const auto it = summary.suites.find(suite);
    if (it == summary.suites.end()) continue;
    suites[std::string(to_string(suite))] = {
        {"passed", it->second.passed}, {"failed", it->second.failed}, {"skipped", it->second.skipped}};
  }
  out["suites"] = std::move(suites);
  out["first_failure"] = summary.first_failure ? to_json(*summary.first_failure) : Json(nullptr);
  return out;
}

Json to_json(const SweepResult& result) {
  Json out;
  out["summary"] = to_json(result.summary);
  Json records = Json::array();
  for (const SweepRecord& rec : result.records) records.push_back(to_json(rec));
  out["records"] = std::move(records);
  return out;
}

void write_summary_text(std::ostream& os, const SweepSummary& summary) {
  os << summary.checked << " checked, " << summary.skipped_gcd << " skipped (gcd)\n";
  for (Suite suite : kAllSuites) {
    const auto it = summary.suites.find(suite);
    if (it == summary.suites.end()) continue;
    os << "  " << to_string(suite) << ": " << it->second.passed << " passed, " << it->second.failed << " failed, "
       << it->second.skipped << " skipped\n";
  }
  os << summary.failures << " failures\n";
  if (summary.first_failure) {
    const Counterexample& c = *summary.first_failure;
    os << "first counterexample: suite=" << to_string(c.suite) << " q=" << c.q << " r=" << c.r << " u0=" << c.u0
       << " limit=" << c.limit << ": " << c.detail << '\n';
  }
}

}  // namespace qlcm
