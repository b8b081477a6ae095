#include "lwcda/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lwcda {

std::string fmt_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string topology_to_text(const NetworkTopology& topo) {
  std::ostringstream out;
  out << topo.node_count() << ' ' << fmt_double(topo.area().width) << ' '
      << fmt_double(topo.area().height) << ' ' << fmt_double(topo.comm_range())
      << ' ' << fmt_double(topo.sink_position().x) << ' '
      << fmt_double(topo.sink_position().y) << '\n';
  for (NodeId v = 0; v < topo.node_count(); ++v) {
    out << v << ' ' << fmt_double(topo.position(v).x) << ' '
        << fmt_double(topo.position(v).y) << '\n';
  }
  return out.str();
}

NetworkTopology topology_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  Rect area;
  double range = 0;
  Point2 sink;
  if (!(in >> n >> area.width >> area.height >> range >> sink.x >> sink.y))
    throw std::runtime_error("topology text: malformed header");
  std::vector<Point2> positions(n);
  for (int i = 0; i < n; ++i) {
    int id = 0;
    Point2 p;
    if (!(in >> id >> p.x >> p.y))
      throw std::runtime_error("topology text: malformed node line");
    if (id < 0 || id >= n)
      throw std::runtime_error("topology text: node id out of range");
    positions[id] = p;
  }
  return NetworkTopology::from_positions(std::move(positions), area, sink, range);
}

std::string assignment_to_text(const ClusterAssignment& assignment) {
  std::ostringstream out;
  for (NodeId v = 0; v < assignment.node_count(); ++v) {
    out << v << ' ' << assignment.member_of[v] << ' '
        << (assignment.is_cluster_head(v) ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string phi_to_text(const SparseMeasurementMatrix& phi) {
  std::ostringstream out;
  out << phi.rows << ' ' << phi.cols << '\n';
  for (int j = 0; j < phi.rows; ++j) {
    for (const auto& entry : phi.row_support[j]) {
      out << j << ' ' << entry.column << ' ' << entry.sign << '\n';
    }
  }
  return out.str();
}

SparseMeasurementMatrix phi_from_text(const std::string& text) {
  std::istringstream in(text);
  SparseMeasurementMatrix phi;
  if (!(in >> phi.rows >> phi.cols))
    throw std::runtime_error("phi text: malformed header");
  phi.row_support.assign(phi.rows, {});
  int j = 0, i = 0, sign = 0;
  while (in >> j >> i >> sign) {
    if (j < 0 || j >= phi.rows || i < 0 || i >= phi.cols ||
        (sign != 1 && sign != -1))
      throw std::runtime_error("phi text: malformed entry");
    phi.row_support[j].push_back({i, sign});
  }
  return phi;
}

CsvWriter::CsvWriter(std::string schema_tag, std::vector<std::string> columns)
    : schema_tag_(std::move(schema_tag)), columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_.size())
    throw std::logic_error("csv row width does not match header");
  rows_.push_back(cells);
}

std::string CsvWriter::str() const {
  std::ostringstream out;
  out << "# schema=" << schema_tag_ << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    out << columns_[i] << (i + 1 < columns_.size() ? ',' : '\n');
  }
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }
  }
  return out.str();
}

void CsvWriter::write(const std::filesystem::path& path) const {
  write_text_file(path, str());
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lwcda
