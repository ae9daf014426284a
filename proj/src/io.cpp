#include "sbpmhd/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sbpmhd/error.hpp"

namespace sbpmhd {

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

std::vector<SnapshotRow> snapshot_rows(const SolutionField& field, const Mesh2D& mesh,
                                       const SbpOperator1D& op, const EquationParams& eq,
                                       const BlendField& blend) {
  const int n = field.n_nodes();
  std::vector<SnapshotRow> rows;
  rows.reserve(field.size());
  for (int e = 0; e < field.num_elements(); ++e) {
    const int ex = mesh.element_x(e), ey = mesh.element_y(e);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        SnapshotRow r;
        r.x = node_coordinate(mesh, op, 0, ex, i);
        r.y = node_coordinate(mesh, op, 1, ey, j);
        r.u = field.at(e, i, j);
        r.p = pressure(r.u, eq);
        r.alpha = blend.node_alpha.empty() ? 0.0 : blend.node_alpha[blend.node_index(e, i, j)];
        rows.push_back(r);
      }
  }
  return rows;
}

void write_snapshot_csv(const std::string& path, const std::vector<SnapshotRow>& rows) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << kSnapshotHeader << '\n';
  std::string line;
  for (const SnapshotRow& r : rows) {
    line.clear();
    line += format_double(r.x);
    line += ',';
    line += format_double(r.y);
    for (double v : r.u.q) {
      line += ',';
      line += format_double(v);
    }
    line += ',';
    line += format_double(r.p);
    line += ',';
    line += format_double(r.alpha);
    line += '\n';
    out << line;
  }
}

std::vector<SnapshotRow> read_snapshot_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::string line;
  if (!std::getline(in, line) || line != kSnapshotHeader)
    throw Error(path + ": unexpected snapshot header");
  std::vector<SnapshotRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double v[13];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int k = 0; k < 13; ++k) {
      const auto r = std::from_chars(p, end, v[k]);
      if (r.ec != std::errc()) throw Error(path + ": malformed row '" + line + "'");
      p = r.ptr;
      if (k < 12) {
        if (p == end || *p != ',') throw Error(path + ": malformed row '" + line + "'");
        ++p;
      }
    }
    if (p != end) throw Error(path + ": trailing data in row '" + line + "'");
    SnapshotRow r;
    r.x = v[0];
    r.y = v[1];
    for (int k = 0; k < kNumVars; ++k) r.u[k] = v[2 + k];
    r.p = v[11];
    r.alpha = v[12];
    rows.push_back(r);
  }
  return rows;
}

std::vector<SnapshotRow> slice_rows(const std::vector<SnapshotRow>& rows, int axis, double coord) {
  auto along = [axis](const SnapshotRow& r) { return axis == 1 ? r.y : r.x; };
  auto across = [axis](const SnapshotRow& r) { return axis == 1 ? r.x : r.y; };
  double best = INFINITY, line = 0.0;
  for (const auto& r : rows) {
    const double d = std::abs(along(r) - coord);
    if (d < best) {
      best = d;
      line = along(r);
    }
  }
  std::vector<SnapshotRow> out;
  for (const auto& r : rows)
    if (along(r) == line) out.push_back(r);
  std::sort(out.begin(), out.end(),
            [&](const SnapshotRow& a, const SnapshotRow& b) { return across(a) < across(b); });
  return out;
}

void Manifest::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = value;
      return;
    }
  entries_.emplace_back(key, value);
}

void Manifest::set(const std::string& key, double value) { set(key, format_double(value)); }
void Manifest::set(const std::string& key, long value) { set(key, std::to_string(value)); }

void Manifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
}

std::map<std::string, std::string> Manifest::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace sbpmhd
