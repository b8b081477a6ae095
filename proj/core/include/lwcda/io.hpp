#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lwcda/cluster_routing.hpp"
#include "lwcda/measurement.hpp"
#include "lwcda/net_topology.hpp"

namespace lwcda {

/// Lossless text form of a double (17 significant digits, '.' decimal).
std::string fmt_double(double value);

/// Line-oriented topology format:
///   N a_x a_y D sink_x sink_y
///   id x y                      (one line per node)
std::string topology_to_text(const NetworkTopology& topo);
NetworkTopology topology_from_text(const std::string& text);

/// One line per node: `id cluster_j is_ch`.
std::string assignment_to_text(const ClusterAssignment& assignment);

/// Header `M N`, then one `j i sign` line per nonzero.
std::string phi_to_text(const SparseMeasurementMatrix& phi);
SparseMeasurementMatrix phi_from_text(const std::string& text);

/// Comma-separated table with a versioned schema comment and a header row.
class CsvWriter {
 public:
  CsvWriter(std::string schema_tag, std::vector<std::string> columns);

  void add_row(const std::vector<std::string>& cells);
  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::string schema_tag_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace lwcda
