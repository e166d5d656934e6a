#include "output.hpp"

#include <cstdio>

namespace gjef::cli {

std::string format_csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

struct CsvCell {
  std::string operator()(double v) const { return format_csv_number(v); }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const std::string& s) const {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      return s;
    }
    std::string q = "\"";
    for (char c : s) {
      q += c;
      if (c == '"') {
        q += '"';
      }
    }
    return q + "\"";
  }
};

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    }
    os << '\n';
  }
}

nlohmann::json to_json(const Table& t) {
  auto out = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

}  // namespace gjef::cli
