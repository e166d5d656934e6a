#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gjef::cli {

/// Bad command-line input; maps to exit status 1.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar "0.5", an explicit list "0.1,0.2,0.5" or a linspace triple
/// "start:stop:count" with count >= 2.
std::vector<double> parse_grid(std::string_view spec, std::string_view flag);

double parse_number(std::string_view text, std::string_view flag);

}  // namespace gjef::cli
