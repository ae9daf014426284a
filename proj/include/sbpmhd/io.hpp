#pragma once

#include <map>
#include <string>
#include <vector>

#include "sbpmhd/blend_field.hpp"
#include "sbpmhd/mesh.hpp"
#include "sbpmhd/physics.hpp"
#include "sbpmhd/sbp_operator.hpp"

namespace sbpmhd {

/// Column order of snapshot and slice files.
inline constexpr const char* kSnapshotHeader = "x,y,rho,mx,my,mz,rhoE,B1,B2,B3,psi,p,alpha";

struct SnapshotRow {
  double x = 0.0, y = 0.0;
  ConsState u;
  double p = 0.0;
  double alpha = 0.0;
};

/// One row per node, element by element; values printed with 17
/// significant digits so a read/write cycle is lossless.
std::vector<SnapshotRow> snapshot_rows(const SolutionField& field, const Mesh2D& mesh,
                                       const SbpOperator1D& op, const EquationParams& eq,
                                       const BlendField& blend);

void write_snapshot_csv(const std::string& path, const std::vector<SnapshotRow>& rows);

/// Throws Error on a header mismatch or malformed row.
std::vector<SnapshotRow> read_snapshot_csv(const std::string& path);

/// Rows of the node line nearest to `coord` along the other axis: axis = 1
/// selects the row of nodes with y closest to coord (a slice along x).
std::vector<SnapshotRow> slice_rows(const std::vector<SnapshotRow>& rows, int axis, double coord);

/// key=value text, one entry per line, in insertion order.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, long value);
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  void write(const std::string& path) const;
  static std::map<std::string, std::string> read(const std::string& path);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_double(double v);

}  // namespace sbpmhd
