#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssc/geometry.hpp"
#include "ssc/types.hpp"

namespace ssc {

std::string fmt_real(Scalar v);  // %.12g; "inf"/"nan" spelled out
std::string fmt_int(long v);

/// Columnar result table. Metadata renders as '#'-prefixed header lines; the
/// body (header + rows) is deterministic for a fixed config and seed.
class ResultTable {
 public:
  explicit ResultTable(std::vector<std::string> columns);

  void set_meta(const std::string& key, const std::string& value);

  template <class... Ts>
  void add(Ts&&... vs) {
    std::vector<std::string> row;
    row.reserve(sizeof...(Ts));
    (row.push_back(cell(std::forward<Ts>(vs))), ...);
    add_row(std::move(row));
  }
  void add_row(std::vector<std::string> row);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  std::string body() const;  // header + rows, no metadata
  void write_csv(const std::string& path) const;

 private:
  static std::string cell(Scalar v) { return fmt_real(v); }
  static std::string cell(int v) { return fmt_int(v); }
  static std::string cell(long v) { return fmt_int(v); }
  static std::string cell(std::size_t v) { return fmt_int(static_cast<long>(v)); }
  static std::string cell(const char* v) { return v; }
  static std::string cell(std::string v) { return v; }

  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

/// FNV-1a hash of a string; used to fingerprint configs in output metadata.
std::uint64_t fnv1a(const std::string& s);

/// Point-matrix CSV: one point per row, numeric columns, optional final
/// integer label column; no header. Points come back as matrix columns.
void write_points_csv(const std::string& path, const Mat& points,
                      const std::vector<int>* labels);
std::pair<Mat, std::optional<std::vector<int>>> read_points_csv(const std::string& path,
                                                                bool has_labels);

/// Stacked bases CSV: one basis vector per row as [subspace_id, coords...].
void write_bases_csv(const std::string& path, const std::vector<SubspaceModel>& models);
std::vector<SubspaceModel> read_bases_csv(const std::string& path);

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace ssc
