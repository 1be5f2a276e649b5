#include "pssp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace pssp {

namespace {

using Row = std::vector<Time>;

bool parse_int(std::string_view token, Time& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && first != last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

bool is_comment(std::string_view line) {
  auto toks = split_ws(line);
  return toks.empty() || toks.front().front() == '#';
}

Row parse_numeric_row(std::string_view line, std::size_t line_no) {
  Row row;
  for (auto tok : split_ws(line)) {
    Time v = 0;
    if (!parse_int(tok, v)) {
      throw InstanceError(InstanceErrorKind::MalformedToken,
                          fmt::format("line {}: '{}' is not an integer", line_no, tok));
    }
    row.push_back(v);
  }
  return row;
}

bool has_letters(std::string_view line) {
  return std::any_of(line.begin(), line.end(),
                     [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; });
}

int checked_dim(Time v, const char* what) {
  if (v < 1 || v > 100000) {
    throw InstanceError(InstanceErrorKind::DimensionMismatch, fmt::format("invalid {} count {}", what, v));
  }
  return static_cast<int>(v);
}

}  // namespace

InstanceFormat parse_format_name(std::string_view name) {
  if (name == "auto") return InstanceFormat::Auto;
  if (name == "jsp") return InstanceFormat::Jsp;
  if (name == "osp-taillard") return InstanceFormat::OspTaillard;
  if (name == "osp-gp") return InstanceFormat::OspGueretPrins;
  if (name == "pssp-json") return InstanceFormat::PsspJson;
  throw std::invalid_argument(fmt::format("unknown instance format '{}'", name));
}

const char* to_string(InstanceFormat format) {
  switch (format) {
    case InstanceFormat::Auto: return "auto";
    case InstanceFormat::Jsp: return "jsp";
    case InstanceFormat::OspTaillard: return "osp-taillard";
    case InstanceFormat::OspGueretPrins: return "osp-gp";
    case InstanceFormat::PsspJson: return "pssp-json";
  }
  return "auto";
}

Instance parse_jsp_standard(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_comment(lines[i])) continue;
    for (auto tok : split_ws(lines[i])) tokens.emplace_back(tok, i + 1);
  }
  std::vector<Time> values;
  values.reserve(tokens.size());
  for (auto [tok, line_no] : tokens) {
    Time v = 0;
    if (!parse_int(tok, v)) {
      throw InstanceError(InstanceErrorKind::MalformedToken,
                          fmt::format("line {}: '{}' is not an integer", line_no, tok));
    }
    values.push_back(v);
  }
  if (values.size() < 2) throw InstanceError(InstanceErrorKind::DimensionMismatch, "missing 'n m' header");
  const int n = checked_dim(values[0], "job");
  const int m = checked_dim(values[1], "machine");
  const std::size_t expected = 2 + 2 * static_cast<std::size_t>(n) * m;
  if (values.size() != expected) {
    throw InstanceError(InstanceErrorKind::DimensionMismatch,
                        fmt::format("expected {} job rows of {} (machine, duration) pairs: {} values, got {}",
                                    n, m, expected - 2, values.size() - 2));
  }

  std::vector<Operation> ops;
  std::vector<Precedence> edges;
  ops.reserve(static_cast<std::size_t>(n) * m);
  std::size_t k = 2;
  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(m, false);
    for (int pos = 0; pos < m; ++pos) {
      const Time machine = values[k++];
      const Time duration = values[k++];
      if (machine < 0 || machine >= m) {
        throw InstanceError(InstanceErrorKind::MachineOutOfRange,
                            fmt::format("job {}: machine {} out of range 0..{}", j, machine, m - 1));
      }
      if (seen[machine]) {
        throw InstanceError(InstanceErrorKind::DuplicateMachine,
                            fmt::format("job {}: duplicate machine {}", j, machine));
      }
      seen[machine] = true;
      if (duration < 1) {
        throw InstanceError(InstanceErrorKind::NonPositiveDuration,
                            fmt::format("job {}: duration {} < 1", j, duration));
      }
      const OpId id = j * m + pos;
      ops.push_back({id, static_cast<int>(machine), j, duration});
      if (pos > 0) edges.push_back({id - 1, id});
    }
  }
  return Instance(m, n, std::move(ops), std::move(edges));
}

Instance parse_osp(std::string_view text, InstanceFormat flavour) {
  auto lines = split_lines(text);
  std::vector<Row> rows;
  bool taillard_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_comment(lines[i])) continue;
    if (has_letters(lines[i])) {
      if (lines[i].find("number of jobs") != std::string_view::npos ||
          lines[i].find("Nb of jobs") != std::string_view::npos) {
        taillard_header = true;
      }
      continue;
    }
    rows.push_back(parse_numeric_row(lines[i], i + 1));
  }
  if (rows.empty()) throw InstanceError(InstanceErrorKind::DimensionMismatch, "empty instance");

  const Row header = rows.front();
  rows.erase(rows.begin());
  int n = 0;
  int m = 0;
  if (header.size() == 1 && !taillard_header) {
    n = m = checked_dim(header[0], "job");
  } else if (header.size() >= 2) {
    n = checked_dim(header[0], "job");
    m = checked_dim(header[1], "machine");
  } else {
    throw InstanceError(InstanceErrorKind::DimensionMismatch, "missing 'n m' header");
  }

  const bool need_machines = flavour != InstanceFormat::OspGueretPrins;
  if (rows.size() != static_cast<std::size_t>(n) &&
      rows.size() != 2 * static_cast<std::size_t>(n)) {
    throw InstanceError(InstanceErrorKind::DimensionMismatch,
                        fmt::format("expected {} or {} matrix rows, got {}", n, 2 * n, rows.size()));
  }
  if (need_machines && rows.size() != 2 * static_cast<std::size_t>(n)) {
    throw InstanceError(InstanceErrorKind::DimensionMismatch,
                        fmt::format("Taillard format needs {} duration rows and {} machine rows", n, n));
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<std::size_t>(m)) {
      throw InstanceError(InstanceErrorKind::DimensionMismatch,
                          fmt::format("matrix row {} has {} entries, expected {}", r + 1, rows[r].size(), m));
    }
  }

  std::vector<std::vector<Time>> machine_of(n, std::vector<Time>(m));
  if (rows.size() == 2 * static_cast<std::size_t>(n)) {
    bool zero_based = false;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        if (rows[n + j][k] == 0) zero_based = true;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k) machine_of[j][k] = rows[n + j][k] - (zero_based ? 0 : 1);
  } else {
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k) machine_of[j][k] = k;
  }

  std::vector<Operation> ops;
  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(m, false);
    for (int k = 0; k < m; ++k) {
      const Time duration = rows[j][k];
      const Time machine = machine_of[j][k];
      if (duration < 1) {
        throw InstanceError(InstanceErrorKind::NonPositiveDuration,
                            fmt::format("job {}: duration {} < 1", j, duration));
      }
      if (machine < 0 || machine >= m) {
        throw InstanceError(InstanceErrorKind::MachineOutOfRange,
                            fmt::format("job {}: machine {} out of range", j, machine));
      }
      if (seen[machine]) {
        throw InstanceError(InstanceErrorKind::DuplicateMachine,
                            fmt::format("job {}: duplicate machine {}", j, machine));
      }
      seen[machine] = true;
      ops.push_back({j * m + k, static_cast<int>(machine), j, duration});
    }
  }
  return Instance(m, n, std::move(ops), {});
}

Instance parse_pssp_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InstanceError(InstanceErrorKind::MalformedToken, e.what());
  }
  try {
    const int m = doc.at("machines").get<int>();
    const int n = doc.at("partitions").get<int>();
    std::vector<Operation> ops;
    OpId id = 0;
    for (const auto& jo : doc.at("operations")) {
      ops.push_back({id++, jo.at("machine").get<int>(), jo.at("partition").get<int>(),
                     jo.at("duration").get<Time>()});
    }
    std::vector<Precedence> edges;
    if (doc.contains("edges")) {
      for (const auto& je : doc.at("edges")) {
        if (!je.is_array() || je.size() != 2) {
          throw InstanceError(InstanceErrorKind::MalformedToken, "edge must be a pair [i, j]");
        }
        edges.push_back({je[0].get<OpId>(), je[1].get<OpId>()});
      }
    }
    return Instance(m, n, std::move(ops), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InstanceError(InstanceErrorKind::MalformedToken, e.what());
  }
}

std::string write_pssp_json(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["machines"] = inst.machines();
  doc["partitions"] = inst.partitions();
  auto ops = nlohmann::ordered_json::array();
  for (const auto& op : inst.operations()) {
    ops.push_back({{"machine", op.machine}, {"partition", op.partition}, {"duration", op.duration}});
  }
  doc["operations"] = std::move(ops);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : inst.edges()) edges.push_back({e.before, e.after});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

InstanceFormat detect_format(const std::filesystem::path& path, std::string_view text) {
  const auto ext = path.extension().string();
  if (ext == ".json") return InstanceFormat::PsspJson;
  if (ext == ".jsp") return InstanceFormat::Jsp;

  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return InstanceFormat::PsspJson;
  if (text.find("processing times") != std::string_view::npos ||
      text.find("number of jobs") != std::string_view::npos) {
    return InstanceFormat::OspTaillard;
  }

  // Numeric sniffing: a JSP row carries 2m values, an OSP row m values.
  std::vector<Row> rows;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_comment(lines[i]) || has_letters(lines[i])) continue;
    try {
      rows.push_back(parse_numeric_row(lines[i], i + 1));
    } catch (const InstanceError&) {
      return InstanceFormat::Jsp;
    }
  }
  if (rows.size() >= 2 && rows.front().size() >= 2) {
    const auto n = rows.front()[0];
    const auto m = rows.front()[1];
    if (rows[1].size() == static_cast<std::size_t>(2 * m)) return InstanceFormat::Jsp;
    if (rows[1].size() == static_cast<std::size_t>(m)) {
      return rows.size() - 1 == static_cast<std::size_t>(2 * n) ? InstanceFormat::OspTaillard
                                                                 : InstanceFormat::OspGueretPrins;
    }
  }
  return InstanceFormat::Jsp;
}

Instance parse_instance(std::string_view text, InstanceFormat format) {
  switch (format) {
    case InstanceFormat::Jsp: return parse_jsp_standard(text);
    case InstanceFormat::OspTaillard:
    case InstanceFormat::OspGueretPrins: return parse_osp(text, format);
    case InstanceFormat::PsspJson: return parse_pssp_json(text);
    case InstanceFormat::Auto: break;
  }
  return parse_instance(text, detect_format({}, text));
}

Instance load_instance(const std::filesystem::path& path, InstanceFormat format) {
  const std::string text = read_file(path);
  if (format == InstanceFormat::Auto) format = detect_format(path, text);
  return parse_instance(text, format);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
}

}  // namespace pssp
