#include "grid.hpp"

#include <charconv>
#include <cmath>

namespace gjef::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) {
      return parts;
    }
    start = pos + 1;
  }
}

}  // namespace

double parse_number(std::string_view text, std::string_view flag) {
  const std::string s(trim(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v)) {
    throw UsageError(std::string(flag) + ": '" + s + "' is not a finite number");
  }
  return v;
}

std::vector<double> parse_grid(std::string_view spec, std::string_view flag) {
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) {
      throw UsageError(std::string(flag) + ": linspace must be start:stop:count");
    }
    const double a = parse_number(parts[0], flag);
    const double b = parse_number(parts[1], flag);
    long count = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 2) {
      throw UsageError(std::string(flag) + ": linspace count must be an integer >= 2");
    }
    std::vector<double> out(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      out[i] = i + 1 == count ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
  }
  std::vector<double> out;
  for (auto part : split(spec, ',')) {
    out.push_back(parse_number(part, flag));
  }
  return out;
}

}  // namespace gjef::cli
