#pragma once

#include <string>
#include <vector>

#include "sgrank/ranks.hpp"
#include "sgrank/verify.hpp"

namespace sgrank {

enum class ReportFormat { table, json, csv };

// Accepts "table", "json", "csv".
ReportFormat parse_report_format(const std::string& text);

// Rank reports, rendered for one universe.  The JSON shape is documented by
// schemas/rank-report.schema.json.
std::string rank_reports_to_json(const std::string& universe, uint32_t n, uint32_t size,
                                 const std::vector<RankReport>& reports);
std::string rank_reports_to_csv(const std::vector<RankReport>& reports);
std::string rank_reports_to_table(const std::vector<RankReport>& reports);

// Verification check rows.  The JSON shape is documented by
// schemas/verify-report.schema.json.
std::string checks_to_json(uint32_t n, const std::vector<TheoremCheck>& checks);
std::string checks_to_csv(const std::vector<TheoremCheck>& checks);
std::string checks_to_table(const std::vector<TheoremCheck>& checks);

std::string render_rank_reports(ReportFormat f, const std::string& universe, uint32_t n,
                                uint32_t size, const std::vector<RankReport>& reports);
std::string render_checks(ReportFormat f, uint32_t n, const std::vector<TheoremCheck>& checks);

}  // namespace sgrank
