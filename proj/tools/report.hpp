#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zetagap/zetagap.h"

namespace zetagap::cli {

enum class Format { kJson, kCsv };

/// A serializable result: one JSON document plus a CSV view of it.
/// Numbers are rounded to 9 significant digits when they are added.
struct Report {
  nlohmann::json json = nlohmann::json::object();
  std::vector<std::string> csv_columns;
  std::vector<std::vector<std::string>> csv_rows;
};

/// Round to 9 significant digits (the precision of every emitted number).
double round9(double x);
std::string format9(double x);
nlohmann::json number(double x);

/// JSON: key-sorted, two-space indent, newline-terminated.
/// CSV: header row then one line per record, "\n" line endings.
std::string emit(const Report& report, Format format);

nlohmann::json to_json(const zg_gap_report& rep);
nlohmann::json to_json(const zg_theta_result& res);
nlohmann::json to_json(const zg_opt_result& res);
nlohmann::json to_json(const zg_table_row& row);
nlohmann::json to_json(const zg_counting& res);

zg_gap_report gap_report_from_json(const nlohmann::json& j);
zg_theta_result theta_result_from_json(const nlohmann::json& j);
zg_opt_result opt_result_from_json(const nlohmann::json& j);
zg_table_row table_row_from_json(const nlohmann::json& j);
zg_counting counting_from_json(const nlohmann::json& j);

/// One JSON object; CSV columns are its keys in sorted order.
Report single(nlohmann::json object);
Report gap_report(const zg_gap_report& rep);
/// CSV columns scheme,k,b_star,value, one row per result.
Report theta_results(const std::vector<zg_theta_result>& results);
Report table(const std::vector<zg_table_row>& rows);
Report counting(const zg_counting& res);

const char* mode_name(zg_bound_mode mode);

}  // namespace zetagap::cli
