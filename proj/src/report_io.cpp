#include "sgrank/report_io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace sgrank {

namespace {

using Json = nlohmann::ordered_json;

// RFC 4180 field: always quoted, embedded quotes doubled.
std::string csv_field(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string joined(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Json report_to_json(const RankReport& r) {
  Json j;
  j["rank"] = r.rank;
  j["value"] = r.value;
  j["status"] = rank_status_name(r.status);
  j["method"] = rank_method_name(r.method);
  if (r.witness) {
    j["witness"] = r.witness->labels;
    j["witness_kind"] = witness_kind_name(r.witness->kind);
  } else {
    j["witness"] = nullptr;
    j["witness_kind"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed.count();
  j["details"] = r.details;
  return j;
}

}  // namespace

ReportFormat parse_report_format(const std::string& text) {
  if (text == "table") return ReportFormat::table;
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown output format '" + text +
                              "' (expected table, json, or csv)");
}

std::string rank_reports_to_json(const std::string& universe, uint32_t n, uint32_t size,
                                 const std::vector<RankReport>& reports) {
  Json j;
  j["universe"] = universe;
  j["n"] = n;
  j["size"] = size;
  j["reports"] = Json::array();
  for (const RankReport& r : reports) j["reports"].push_back(report_to_json(r));
  return j.dump(2) + "\n";
}

std::string rank_reports_to_csv(const std::vector<RankReport>& reports) {
  std::string out = "rank,value,status,method,elapsed_ms,witness,details\n";
  for (const RankReport& r : reports) {
    out += csv_field(r.rank) + ",";
    out += std::to_string(r.value) + ",";
    out += csv_field(rank_status_name(r.status)) + ",";
    out += csv_field(rank_method_name(r.method)) + ",";
    out += std::to_string(r.elapsed.count()) + ",";
    out += csv_field(r.witness ? joined(r.witness->labels, " ") : "") + ",";
    out += csv_field(r.details) + "\n";
  }
  return out;
}

std::string rank_reports_to_table(const std::vector<RankReport>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "RANK" << std::setw(8) << "VALUE" << std::setw(13)
      << "STATUS" << std::setw(19) << "METHOD" << "TIME\n";
  for (const RankReport& r : reports) {
    out << std::left << std::setw(6) << r.rank << std::setw(8) << r.value << std::setw(13)
        << rank_status_name(r.status) << std::setw(19) << rank_method_name(r.method)
        << r.elapsed.count() << " ms\n";
    if (r.witness)
      out << "      witness (" << witness_kind_name(r.witness->kind)
          << "): " << joined(r.witness->labels, ", ") << "\n";
    if (!r.details.empty()) out << "      " << r.details << "\n";
  }
  return out.str();
}

std::string checks_to_json(uint32_t n, const std::vector<TheoremCheck>& checks) {
  uint32_t pass = 0, fail = 0, skipped = 0;
  for (const TheoremCheck& c : checks) {
    if (c.outcome == CheckOutcome::pass) ++pass;
    else if (c.outcome == CheckOutcome::fail) ++fail;
    else ++skipped;
  }
  Json j;
  j["n"] = n;
  j["all_pass"] = fail == 0;
  j["counts"] = Json{{"pass", pass}, {"fail", fail}, {"skipped_infeasible", skipped}};
  j["checks"] = Json::array();
  for (const TheoremCheck& c : checks) {
    Json row;
    row["id"] = c.id;
    row["description"] = c.description;
    row["n"] = c.n;
    row["outcome"] = check_outcome_name(c.outcome);
    row["details"] = c.details;
    j["checks"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string checks_to_csv(const std::vector<TheoremCheck>& checks) {
  std::string out = "id,n,outcome,description,details\n";
  for (const TheoremCheck& c : checks) {
    out += csv_field(c.id) + ",";
    out += std::to_string(c.n) + ",";
    out += csv_field(check_outcome_name(c.outcome)) + ",";
    out += csv_field(c.description) + ",";
    out += csv_field(c.details) + "\n";
  }
  return out;
}

std::string checks_to_table(const std::vector<TheoremCheck>& checks) {
  std::ostringstream out;
  uint32_t pass = 0, fail = 0, skipped = 0;
  for (const TheoremCheck& c : checks) {
    const char* name = check_outcome_name(c.outcome);
    if (c.outcome == CheckOutcome::pass) ++pass;
    else if (c.outcome == CheckOutcome::fail) ++fail;
    else ++skipped;
    out << std::left << std::setw(20) << name << c.id << "\n";
    out << "                    " << c.description << "\n";
    if (!c.details.empty()) out << "                    " << c.details << "\n";
  }
  out << checks.size() << " checks: " << pass << " pass, " << fail << " fail, " << skipped
      << " skipped-infeasible\n";
  return out.str();
}

std::string render_rank_reports(ReportFormat f, const std::string& universe, uint32_t n,
                                uint32_t size, const std::vector<RankReport>& reports) {
  switch (f) {
    case ReportFormat::json: return rank_reports_to_json(universe, n, size, reports);
    case ReportFormat::csv: return rank_reports_to_csv(reports);
    case ReportFormat::table: return rank_reports_to_table(reports);
  }
  return {};
}

std::string render_checks(ReportFormat f, uint32_t n, const std::vector<TheoremCheck>& checks) {
  switch (f) {
    case ReportFormat::json: return checks_to_json(n, checks);
    case ReportFormat::csv: return checks_to_csv(checks);
    case ReportFormat::table: return checks_to_table(checks);
  }
  return {};
}

}  // namespace sgrank
