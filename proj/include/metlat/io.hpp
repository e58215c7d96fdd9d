#pragma once

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metlat/adjoints.hpp"
#include "metlat/partitions.hpp"
#include "metlat/search.hpp"
#include "metlat/structures.hpp"
#include "metlat/weight.hpp"

namespace metlat {

/// Malformed input with a 1-based position.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Weight-structure text format (.wsm):
///   n=<count>
///   labels=<comma-separated>
///   <n rows of n whitespace-separated entries: p/q, decimal, or inf>
/// Writing always emits integers, p/q, or inf, so output re-parses to a
/// structurally equal value.
WeightStructure read_weight(std::istream& in);
WeightStructure read_weight_file(const std::string& path);
void write_weight(std::ostream& out, const WeightStructure& d);
std::string to_wsm(const WeightStructure& d);

/// Partition text format:
///   n=<count>
///   blocks=<semicolon-separated comma-lists of labels>
/// Point order is the order of first appearance in the blocks line.
std::pair<Partition, std::vector<std::string>> read_partition(std::istream& in);
std::pair<Partition, std::vector<std::string>> read_partition_file(
    const std::string& path);
std::string to_partition_text(const Partition& p,
                              const std::vector<std::string>& labels);

nlohmann::json to_json(const ExtValue& v);
nlohmann::json to_json(const WeightStructure& d);
nlohmann::json to_json(const GaloisReport& report);
nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const EmbeddingReport& report);
nlohmann::json to_json(const PairWitness& witness, const WeightStructure& d);
nlohmann::json to_json(const MengerWitness& witness, const WeightStructure& d);
nlohmann::json to_json(const PairStepWitness& witness, const WeightStructure& d);

}  // namespace metlat
