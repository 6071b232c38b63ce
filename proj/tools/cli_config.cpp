#include "cli_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace recon::cli {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string_view> split(std::string_view text, char separator) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(separator, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) {
      return parts;
    }
    start = end + 1;
  }
}

std::size_t parse_size(std::string_view text) {
  const std::string trimmed = trim(text);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
  if (trimmed.empty() || ec != std::errc{} || end != trimmed.data() + trimmed.size()) {
    throw std::invalid_argument("not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

bool flag_present(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& arg) {
    return arg == flag || arg.rfind(flag + "=", 0) == 0;
  });
}

}  // namespace

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) {
        throw std::runtime_error("--config needs a file name");
      }
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (path.empty()) {
    return out;
  }

  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file " + path);
  }
  const std::vector<std::string> given = out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const std::string content = trim(std::string_view(line).substr(0, line.find('#')));
    if (content.empty()) {
      continue;
    }
    const auto equals = content.find('=');
    if (equals == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(number) +
                               ": expected 'key = value'");
    }
    std::string key = trim(std::string_view(content).substr(0, equals));
    const std::string value = trim(std::string_view(content).substr(equals + 1));
    while (!key.empty() && key.front() == '-') {
      key.erase(key.begin());
    }
    if (key.empty() || value.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(number) +
                               ": expected 'key = value'");
    }
    const std::string flag = "--" + key;
    if (!flag_present(given, flag)) {
      out.push_back(flag);
      out.push_back(value);
    }
  }
  return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> values;
  for (const auto part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      values.push_back(parse_size(part));
      continue;
    }
    const std::size_t lo = parse_size(part.substr(0, dots));
    const std::size_t hi = parse_size(part.substr(dots + 2));
    if (lo > hi) {
      throw std::invalid_argument("empty range '" + std::string(part) + "'");
    }
    for (std::size_t v = lo; v <= hi; ++v) {
      values.push_back(v);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> values;
  for (const auto part : split(text, ',')) {
    const std::string trimmed = trim(part);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(trimmed, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (trimmed.empty() || used != trimmed.size()) {
      throw std::invalid_argument("not a number: '" + std::string(part) + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace recon::cli
