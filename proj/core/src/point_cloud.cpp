#include "dirset/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dirset/errors.hpp"

namespace dirset {

PointCloud::PointCloud(std::size_t dim, std::vector<double> data, std::string label,
                       bool allow_duplicates)
    : dim_(dim), data_(std::move(data)), label_(std::move(label)) {
  if (dim_ < 2) throw DimensionMismatch("PointCloud: dimension must be >= 2");
  if (data_.size() % dim_ != 0) {
    throw DimensionMismatch("PointCloud: coordinate count not a multiple of dimension");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw ParseError("PointCloud: non-finite coordinate at point " +
                       std::to_string(i / dim_) + ", column " + std::to_string(i % dim_));
    }
  }
  if (!allow_duplicates && size() > 1) {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto row_less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(
          data_.begin() + a * dim_, data_.begin() + (a + 1) * dim_,
          data_.begin() + b * dim_, data_.begin() + (b + 1) * dim_);
    };
    std::sort(order.begin(), order.end(), row_less);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const std::size_t a = order[k], b = order[k + 1];
      if (std::equal(data_.begin() + a * dim_, data_.begin() + (a + 1) * dim_,
                     data_.begin() + b * dim_)) {
        throw DuplicatePoints("PointCloud: points " + std::to_string(std::min(a, b)) + " and " +
                              std::to_string(std::max(a, b)) +
                              " are exact duplicates (pass allow_duplicates to keep them)");
      }
    }
  }
}

PointCloud PointCloud::from_points(std::initializer_list<std::initializer_list<double>> pts,
                                   std::string label) {
  std::vector<std::vector<double>> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.emplace_back(p);
  if (rows.empty()) throw EmptyInput("PointCloud::from_points: no points");
  return from_rows(rows.front().size(), rows, std::move(label));
}

PointCloud PointCloud::from_rows(std::size_t dim, const std::vector<std::vector<double>>& pts,
                                 std::string label, bool allow_duplicates) {
  std::vector<double> flat;
  flat.reserve(pts.size() * dim);
  for (const auto& p : pts) {
    if (p.size() != dim) throw DimensionMismatch("PointCloud: ragged point list");
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return PointCloud(dim, std::move(flat), std::move(label), allow_duplicates);
}

}  // namespace dirset
