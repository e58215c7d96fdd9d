#include "metlat/io.hpp"

#include <json.hpp>

#include <bit>
#include <fstream>
#include <sstream>

namespace metlat {

using nlohmann::json;

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct LineReader {
  std::istream& in;
  int line = 0;

  /// Next line, \r-stripped; throws when the stream ends early.
  std::string next(const char* expected) {
    std::string text;
    if (!std::getline(in, text))
      throw ParseError(line + 1, 1, std::string("expected ") + expected);
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    return text;
  }

  void expect_end() {
    std::string text;
    while (std::getline(in, text)) {
      ++line;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      if (text.find_first_not_of(" \t") != std::string::npos)
        throw ParseError(line, 1, "unexpected trailing content");
    }
  }
};

int parse_count_line(const std::string& text, int line) {
  if (text.rfind("n=", 0) != 0) throw ParseError(line, 1, "expected 'n=<count>'");
  const std::string digits = text.substr(2);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, 3, "point count must be a positive integer");
  long n = 0;
  try {
    n = std::stol(digits);
  } catch (const std::exception&) {
    throw ParseError(line, 3, "point count out of range");
  }
  if (n < 1 || n > 10000) throw ParseError(line, 3, "point count out of range");
  return static_cast<int>(n);
}

std::vector<std::string> split(const std::string& text, char sep,
                               std::vector<int>* columns = nullptr) {
  std::vector<std::string> items;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = text.find(sep, pos);
    if (columns) columns->push_back(static_cast<int>(pos) + 1);
    items.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return items;
}

}  // namespace

WeightStructure read_weight(std::istream& in) {
  LineReader reader{in};
  const std::string count_line = reader.next("'n=<count>'");
  const int n = parse_count_line(count_line, reader.line);

  const std::string labels_line = reader.next("'labels=<comma-separated>'");
  if (labels_line.rfind("labels=", 0) != 0)
    throw ParseError(reader.line, 1, "expected 'labels=<comma-separated>'");
  std::vector<int> label_columns;
  std::vector<std::string> labels =
      split(labels_line.substr(7), ',', &label_columns);
  if (static_cast<int>(labels.size()) != n)
    throw ParseError(reader.line, 8,
                     "expected " + std::to_string(n) + " labels, found " +
                         std::to_string(labels.size()));

  WeightMatrix m(n, n);
  for (int row = 0; row < n; ++row) {
    const std::string text = reader.next("a matrix row");
    int col = 0;
    std::size_t pos = 0;
    for (int entry = 0; entry < n; ++entry) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      if (pos >= text.size())
        throw ParseError(reader.line, static_cast<int>(pos) + 1,
                         "row has " + std::to_string(entry) + " entries, expected " +
                             std::to_string(n));
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t') ++pos;
      try {
        m(row, col) = parse_ext_value(
            std::string_view(text).substr(start, pos - start));
      } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line, static_cast<int>(start) + 1, e.what());
      }
      ++col;
    }
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos != text.size())
      throw ParseError(reader.line, static_cast<int>(pos) + 1,
                       "row has more than " + std::to_string(n) + " entries");
  }
  reader.expect_end();

  try {
    return WeightStructure(std::move(labels), std::move(m));
  } catch (const std::invalid_argument& e) {
    throw ParseError(2, 8, e.what());
  }
}

WeightStructure read_weight_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_weight(in);
}

void write_weight(std::ostream& out, const WeightStructure& d) {
  out << "n=" << d.size() << "\nlabels=";
  for (std::size_t i = 0; i < d.labels().size(); ++i) {
    if (i) out << ',';
    out << d.labels()[i];
  }
  out << '\n';
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    for (Eigen::Index j = 0; j < d.size(); ++j) {
      if (j) out << ' ';
      out << to_string(d(i, j));
    }
    out << '\n';
  }
}

std::string to_wsm(const WeightStructure& d) {
  std::ostringstream out;
  write_weight(out, d);
  return out.str();
}

std::pair<Partition, std::vector<std::string>> read_partition(std::istream& in) {
  LineReader reader{in};
  const std::string count_line = reader.next("'n=<count>'");
  const int n = parse_count_line(count_line, reader.line);

  const std::string blocks_line = reader.next("'blocks=<semicolon-separated blocks>'");
  if (blocks_line.rfind("blocks=", 0) != 0)
    throw ParseError(reader.line, 1, "expected 'blocks=<semicolon-separated blocks>'");

  std::vector<std::string> labels;
  std::vector<int> assignment;
  const std::string body = blocks_line.substr(7);
  std::vector<int> block_columns;
  const std::vector<std::string> blocks = split(body, ';', &block_columns);
  int block_id = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<int> label_columns;
    const std::vector<std::string> members = split(blocks[b], ',', &label_columns);
    for (std::size_t t = 0; t < members.size(); ++t) {
      const std::string& label = members[t];
      const int column = 8 + block_columns[b] - 1 + label_columns[t] - 1;
      if (label.empty()) throw ParseError(reader.line, column, "empty label");
      if (std::find(labels.begin(), labels.end(), label) != labels.end())
        throw ParseError(reader.line, column, "label '" + label + "' repeats");
      labels.push_back(label);
      assignment.push_back(block_id);
    }
    ++block_id;
  }
  if (static_cast<int>(labels.size()) != n)
    throw ParseError(reader.line, 8,
                     "blocks name " + std::to_string(labels.size()) +
                         " points, expected " + std::to_string(n));
  reader.expect_end();
  return {Partition(std::move(assignment)), std::move(labels)};
}

std::pair<Partition, std::vector<std::string>> read_partition_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return read_partition(in);
}

std::string to_partition_text(const Partition& p,
                              const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != p.size())
    throw std::invalid_argument("to_partition_text: label count mismatch");
  std::string out = "n=" + std::to_string(p.size()) + "\nblocks=";
  const std::vector<std::vector<int>> blocks = p.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ';';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ',';
      out += labels[static_cast<std::size_t>(blocks[b][i])];
    }
  }
  out += '\n';
  return out;
}

json to_json(const ExtValue& v) { return to_string(v); }

json to_json(const WeightStructure& d) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < d.size(); ++j) row.push_back(to_string(d(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", d.size()}, {"labels", d.labels()}, {"rows", std::move(rows)}};
}

namespace {

json inputs_json(const std::vector<WeightStructure>& inputs) {
  json out = json::array();
  for (const WeightStructure& d : inputs) out.push_back(to_json(d));
  return out;
}

}  // namespace

json to_json(const GaloisReport& report) {
  json out{{"claim", report.claim},
           {"over", to_string(report.over)},
           {"checked", report.checked},
           {"exhaustive", report.exhaustive},
           {"result", report.pass() ? "pass" : "witness"}};
  if (!report.enumerated.empty()) out["enumerated"] = report.enumerated;
  if (report.witness) {
    out["witness"] = json{{"inputs", inputs_json(report.witness->inputs)},
                          {"lower_holds", report.witness->lower_holds},
                          {"upper_holds", report.witness->upper_holds},
                          {"note", report.witness->note}};
  }
  return out;
}

json to_json(const SearchReport& report) {
  json out{{"property", report.property},
           {"context", to_string(report.context)},
           {"trials", report.trials_executed},
           {"exhaustive", report.exhaustive},
           {"outcome", report.outcome},
           {"elapsed_seconds", report.elapsed_seconds}};
  if (!report.enumerated.empty()) out["enumerated"] = report.enumerated;
  if (!report.note.empty()) out["note"] = report.note;
  if (report.witness) {
    out["witness"] = json{{"inputs", inputs_json(report.witness->inputs)},
                          {"lhs", report.witness->lhs},
                          {"rhs", report.witness->rhs},
                          {"trial", report.witness->trial}};
  }
  return out;
}

namespace {

json violation_json(const EmbeddingViolation& v) {
  return json{{"first", v.first},       {"second", v.second},
              {"pair", {v.point_a, v.point_b}}, {"embedded", to_string(v.embedded)},
              {"pointwise", to_string(v.pointwise)}};
}

}  // namespace

json to_json(const EmbeddingReport& report) {
  json out{{"meet_preserved", report.meet_preserved},
           {"join_preserved", report.join_preserved},
           {"injective", report.injective},
           {"topology_is_discrete", report.topology_is_discrete}};
  if (report.meet_witness) out["meet_witness"] = violation_json(*report.meet_witness);
  if (report.join_witness) out["join_witness"] = violation_json(*report.join_witness);
  return out;
}

json to_json(const PairWitness& witness, const WeightStructure& d) {
  json out{{"pass", witness.pass}};
  if (!witness.pass) {
    out["x"] = d.labels()[static_cast<std::size_t>(witness.x)];
    out["y"] = d.labels()[static_cast<std::size_t>(witness.y)];
  }
  return out;
}

json to_json(const MengerWitness& witness, const WeightStructure& d) {
  json out{{"pass", witness.pass}};
  if (!witness.pass) {
    out["x"] = d.labels()[static_cast<std::size_t>(witness.x)];
    out["y"] = d.labels()[static_cast<std::size_t>(witness.y)];
    if (witness.radius) out["r"] = to_string(*witness.radius);
  }
  return out;
}

json to_json(const PairStepWitness& witness, const WeightStructure& d) {
  json support = json::array();
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (witness.support & (PointSet{1} << i))
      support.push_back(d.labels()[static_cast<std::size_t>(i)]);
  json changed = json::array();
  for (auto [a, b] : witness.changed)
    changed.push_back({d.labels()[static_cast<std::size_t>(a)],
                       d.labels()[static_cast<std::size_t>(b)]});
  return json{{"support", std::move(support)}, {"changed", std::move(changed)}};
}

}  // namespace metlat
