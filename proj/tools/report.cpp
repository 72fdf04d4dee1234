#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace zetagap::cli {

using nlohmann::json;

std::string format9(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

double round9(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format9(x).c_str(), nullptr);
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round9(x);
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    return quoted + "\"";
  }
  if (v.is_number_float()) return format9(v.get<double>());
  return v.dump();
}

double get_double(const json& j, const char* key) {
  const auto& v = j.at(key);
  return v.is_null() ? std::nan("") : v.get<double>();
}

zg_bound_mode mode_from(const std::string& name) {
  if (name == "as_printed") return ZG_MODE_AS_PRINTED;
  if (name == "rigorous_k_piece") return ZG_MODE_RIGOROUS;
  throw std::invalid_argument("unknown scheme mode '" + name + "'");
}

}  // namespace

const char* mode_name(zg_bound_mode mode) {
  return mode == ZG_MODE_RIGOROUS ? "rigorous_k_piece" : "as_printed";
}

std::string emit(const Report& report, Format format) {
  if (format == Format::kJson) return report.json.dump(2) + "\n";
  std::ostringstream out;
  for (std::size_t i = 0; i < report.csv_columns.size(); ++i) {
    out << (i ? "," : "") << report.csv_columns[i];
  }
  out << "\n";
  for (const auto& row : report.csv_rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

json to_json(const zg_gap_report& rep) {
  return json{{"r", rep.r},
              {"max_norm", number(rep.max_norm)},
              {"argmax", rep.argmax},
              {"min_norm", number(rep.min_norm)},
              {"argmin", rep.argmin},
              {"count_above", rep.count_above},
              {"count_below", rep.count_below},
              {"theta_used", number(rep.theta_used)},
              {"vartheta_used", number(rep.vartheta_used)},
              {"n_gaps", rep.n_gaps}};
}

json to_json(const zg_theta_result& res) {
  return json{{"scheme", mode_name(res.scheme.mode)},
              {"k", res.scheme.k},
              {"b_star", number(res.b_star)},
              {"value", number(res.value)},
              {"bracket_lo", number(res.bracket_lo)},
              {"bracket_hi", number(res.bracket_hi)},
              {"boundary_warning", res.boundary_warning != 0},
              {"valid", res.valid != 0}};
}

json to_json(const zg_opt_result& res) {
  return json{{"arg_star", number(res.arg_star)},
              {"val_star", number(res.val_star)},
              {"bracket_lo", number(res.bracket_lo)},
              {"bracket_hi", number(res.bracket_hi)},
              {"boundary_warning", res.boundary_warning != 0}};
}

json to_json(const zg_table_row& row) {
  return json{{"r", row.r},
              {"ell", number(row.ell)},
              {"c", row.status == ZG_OK ? number(row.c) : json(nullptr)},
              {"h_value", row.status == ZG_OK ? number(row.h_value) : json(nullptr)},
              {"status", zg_status_name(row.status)}};
}

json to_json(const zg_counting& res) {
  return json{{"T", number(res.T)},
              {"empirical", res.empirical},
              {"main_term", number(res.main_term)},
              {"refined_term", number(res.refined_term)}};
}

zg_gap_report gap_report_from_json(const json& j) {
  zg_gap_report rep{};
  rep.r = j.at("r").get<int>();
  rep.max_norm = get_double(j, "max_norm");
  rep.argmax = j.at("argmax").get<std::size_t>();
  rep.min_norm = get_double(j, "min_norm");
  rep.argmin = j.at("argmin").get<std::size_t>();
  rep.count_above = j.at("count_above").get<std::size_t>();
  rep.count_below = j.at("count_below").get<std::size_t>();
  rep.theta_used = get_double(j, "theta_used");
  rep.vartheta_used = get_double(j, "vartheta_used");
  rep.n_gaps = j.at("n_gaps").get<std::size_t>();
  return rep;
}

zg_theta_result theta_result_from_json(const json& j) {
  zg_theta_result res{};
  res.scheme.mode = mode_from(j.at("scheme").get<std::string>());
  res.scheme.k = j.at("k").get<int>();
  res.b_star = get_double(j, "b_star");
  res.value = get_double(j, "value");
  res.bracket_lo = get_double(j, "bracket_lo");
  res.bracket_hi = get_double(j, "bracket_hi");
  res.boundary_warning = j.at("boundary_warning").get<bool>() ? 1 : 0;
  res.valid = j.at("valid").get<bool>() ? 1 : 0;
  return res;
}

zg_opt_result opt_result_from_json(const json& j) {
  return zg_opt_result{get_double(j, "arg_star"), get_double(j, "val_star"),
                       get_double(j, "bracket_lo"), get_double(j, "bracket_hi"),
                       j.at("boundary_warning").get<bool>() ? 1 : 0};
}

zg_table_row table_row_from_json(const json& j) {
  zg_table_row row{};
  row.r = j.at("r").get<int>();
  row.ell = get_double(j, "ell");
  const auto status = j.at("status").get<std::string>();
  row.status = status == "ok" ? ZG_OK : ZG_ERR_NO_CERTIFICATE;
  row.c = row.status == ZG_OK ? get_double(j, "c") : 0.0;
  row.h_value = row.status == ZG_OK ? get_double(j, "h_value") : 0.0;
  return row;
}

zg_counting counting_from_json(const json& j) {
  return zg_counting{get_double(j, "T"), j.at("empirical").get<std::size_t>(),
                     get_double(j, "main_term"), get_double(j, "refined_term")};
}

Report single(json object) {
  Report out;
  std::vector<std::string> row;
  for (const auto& [key, value] : object.items()) {
    out.csv_columns.push_back(key);
    row.push_back(csv_cell(value));
  }
  out.csv_rows.push_back(std::move(row));
  out.json = std::move(object);
  return out;
}

Report gap_report(const zg_gap_report& rep) { return single(to_json(rep)); }

Report theta_results(const std::vector<zg_theta_result>& results) {
  Report out;
  out.csv_columns = {"scheme", "k", "b_star", "value"};
  json rows = json::array();
  for (const auto& res : results) {
    rows.push_back(to_json(res));
    out.csv_rows.push_back({mode_name(res.scheme.mode), std::to_string(res.scheme.k),
                            format9(res.b_star), format9(res.value)});
  }
  out.json = results.size() == 1 ? rows.front() : json{{"results", rows}};
  return out;
}

Report table(const std::vector<zg_table_row>& rows) {
  Report out;
  out.csv_columns = {"r", "ell", "c", "h_value", "status"};
  json arr = json::array();
  for (const auto& row : rows) {
    const auto j = to_json(row);
    arr.push_back(j);
    out.csv_rows.push_back({csv_cell(j["r"]), csv_cell(j["ell"]), csv_cell(j["c"]),
                            csv_cell(j["h_value"]), csv_cell(j["status"])});
  }
  out.json = json{{"rows", arr}};
  return out;
}

Report counting(const zg_counting& res) { return single(to_json(res)); }

}  // namespace zetagap::cli
