#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dirset {

// Finite point set in R^d, d >= 2. Coordinates are stored flat, row-major,
// so pairwise kernels stream through memory without per-point allocations.
//
// Ingestion rejects non-finite coordinates always, and exact duplicate rows
// unless allow_duplicates is set (near-duplicates are a separate concern,
// handled by the coincident-pair threshold during enumeration).
class PointCloud {
 public:
  PointCloud(std::size_t dim, std::vector<double> data, std::string label = {},
             bool allow_duplicates = false);

  // Convenience for small literal fixtures: one inner list per point.
  static PointCloud from_points(std::initializer_list<std::initializer_list<double>> pts,
                                std::string label = {});
  static PointCloud from_rows(std::size_t dim, const std::vector<std::vector<double>>& pts,
                              std::string label = {}, bool allow_duplicates = false);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return data_.size() / dim_; }
  std::span<const double> point(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  const std::vector<double>& data() const { return data_; }
  const std::string& label() const { return label_; }

 private:
  std::size_t dim_;
  std::vector<double> data_;
  std::string label_;
};

}  // namespace dirset
