#include "ghmst/io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ghmst/errors.hpp"

namespace ghmst {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i + 1);
  return labels;
}

std::string trim(const std::string& text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  return text.substr(begin, end - begin);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
  return cells;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size();
}

}  // namespace

FiniteMetricSpace parse_space_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw Error(Errc::parse_error, "expected an object with a \"matrix\" field");
  }
  std::vector<std::vector<double>> matrix;
  try {
    matrix = doc.at("matrix").get<std::vector<std::vector<double>>>();
  } catch (const std::exception& e) {
    throw Error(Errc::parse_error, std::string("bad \"matrix\": ") + e.what());
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    try {
      labels = doc.at("labels").get<std::vector<std::string>>();
    } catch (const std::exception& e) {
      throw Error(Errc::parse_error, std::string("bad \"labels\": ") + e.what());
    }
  } else {
    labels = default_labels(matrix.size());
  }
  return validate_metric(matrix, std::move(labels));
}

FiniteMetricSpace parse_space_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw Error(Errc::parse_error, "empty CSV input");

  std::vector<std::string> labels;
  std::size_t first_matrix_row = 0;
  {
    double ignored = 0.0;
    bool numeric = true;
    for (const std::string& cell : rows[0]) {
      if (!parse_double(cell, ignored)) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      labels = rows[0];
      first_matrix_row = 1;
    }
  }
  if (first_matrix_row >= rows.size()) {
    throw Error(Errc::parse_error, "CSV has a header but no matrix rows");
  }

  std::vector<std::vector<double>> matrix;
  for (std::size_t r = first_matrix_row; r < rows.size(); ++r) {
    std::vector<double> row(rows[r].size());
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (!parse_double(rows[r][c], row[c])) {
        throw Error(Errc::parse_error,
                    "cannot parse '" + rows[r][c] + "' as a number (row " +
                        std::to_string(r + 1) + ")");
      }
    }
    matrix.push_back(std::move(row));
  }
  if (labels.empty()) labels = default_labels(matrix.size());
  return validate_metric(matrix, std::move(labels));
}

FiniteMetricSpace load_space(const std::string& path, SpaceFormat format) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::io_error, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();

  if (format == SpaceFormat::auto_detect) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
      format = SpaceFormat::json;
    } else if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
      format = SpaceFormat::csv;
    } else {
      const std::string head = trim(text);
      format = (!head.empty() && head.front() == '{') ? SpaceFormat::json
                                                      : SpaceFormat::csv;
    }
  }
  return format == SpaceFormat::json ? parse_space_json(text) : parse_space_csv(text);
}

std::string space_digest(const FiniteMetricSpace& space) {
  std::uint64_t hash = 1469598103934665603ull;
  auto feed = [&hash](const char* data, std::size_t length) {
    for (std::size_t i = 0; i < length; ++i) {
      hash ^= static_cast<unsigned char>(data[i]);
      hash *= 1099511628211ull;
    }
  };
  for (const std::string& label : space.labels()) {
    feed(label.data(), label.size());
    feed("\n", 1);
  }
  feed("|", 1);
  char buffer[40];
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      const int written = std::snprintf(buffer, sizeof buffer, "%.17g,", space.dist(i, j));
      feed(buffer, static_cast<std::size_t>(written));
    }
  }
  char out[32];
  std::snprintf(out, sizeof out, "fnv1a:%016llx",
                static_cast<unsigned long long>(hash));
  return out;
}

}  // namespace ghmst
