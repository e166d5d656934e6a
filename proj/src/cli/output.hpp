#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gjef::cli {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 12 significant digits, the CSV precision.
std::string format_csv_number(double v);

/// Comma separated, header row, LF line endings.
void write_csv(std::ostream& os, const Table& t);

/// Array of row objects; doubles keep full precision.
nlohmann::json to_json(const Table& t);

}  // namespace gjef::cli
