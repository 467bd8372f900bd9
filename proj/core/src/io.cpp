#include "dirset/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "dirset/errors.hpp"
#include "dirset/version.hpp"

namespace dirset {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t' || *(last - 1) == '\r')) --last;
  if (first == last) return false;
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

ordered_json meta_json(const JsonMeta& meta) {
  ordered_json echo = ordered_json::object();
  for (const auto& [k, v] : meta.config_echo) echo[k] = v;
  return echo;
}

ordered_json direction_array(const UnitDirection& u) {
  ordered_json arr = ordered_json::array();
  for (const double c : u.coords) arr.push_back(c);
  return arr;
}

UnitDirection direction_from_array(const ordered_json& arr) {
  UnitDirection u;
  u.coords.reserve(arr.size());
  for (const auto& v : arr) u.coords.push_back(v.get<double>());
  return u;
}

}  // namespace

PointCloud read_points_csv(std::istream& in, std::string label, bool allow_duplicates) {
  std::vector<double> flat;
  std::size_t dim = 0;
  std::string line;
  std::size_t line_no = 0;
  bool saw_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip trailing CR and skip blank lines.
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (const char ch : line) {
      if (ch != ' ' && ch != '\t') {
        blank = false;
        break;
      }
    }
    if (blank) continue;

    const std::vector<std::string_view> tokens = split_csv(line);
    std::vector<double> row(tokens.size());
    bool numeric = true;
    for (std::size_t c = 0; c < tokens.size(); ++c) {
      if (!parse_double(tokens[c], row[c])) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (!saw_data) continue;  // header row
      throw ParseError("points csv, line " + std::to_string(line_no) + ": non-numeric value");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw ParseError("points csv, line " + std::to_string(line_no) +
                         ": non-finite value in column " + std::to_string(c + 1));
      }
    }
    if (!saw_data) {
      dim = row.size();
      saw_data = true;
    } else if (row.size() != dim) {
      throw ParseError("points csv, line " + std::to_string(line_no) + ": expected " +
                       std::to_string(dim) + " columns, found " + std::to_string(row.size()));
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (!saw_data) throw ParseError("points csv: no data rows");
  if (dim < 2) throw ParseError("points csv: points must have at least 2 columns");
  return PointCloud(dim, std::move(flat), std::move(label), allow_duplicates);
}

PointCloud read_points_csv_file(const std::string& path, bool allow_duplicates) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_points_csv(in, path, allow_duplicates);
}

void write_points_csv(std::ostream& out, const PointCloud& cloud) {
  for (std::size_t c = 0; c < cloud.dim(); ++c) {
    if (c > 0) out << ',';
    out << 'x' << c;
  }
  out << '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    std::span<const double> p = cloud.point(i);
    for (std::size_t c = 0; c < cloud.dim(); ++c) {
      if (c > 0) out << ',';
      out << format_double(p[c]);
    }
    out << '\n';
  }
}

void write_points_csv_file(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_points_csv(out, cloud);
}

std::string direction_set_to_json(const DirectionSet& ds, const JsonMeta& meta) {
  ordered_json j;
  j["tool_version"] = std::string(kToolVersion);
  j["config_echo"] = meta_json(meta);
  j["kind"] = "direction_set";
  j["dim"] = ds.dim;
  j["n_points"] = ds.n_points;
  j["pairs_examined"] = ds.pairs_examined;
  j["skipped_coincident"] = ds.skipped_coincident;
  j["tol"] = ds.dedup_tol;
  j["oriented_included"] = ds.oriented_included;
  ordered_json proj = ordered_json::array();
  for (const auto& p : ds.projective) proj.push_back(direction_array(p.rep));
  j["projective"] = std::move(proj);
  if (ds.oriented_included) {
    ordered_json ori = ordered_json::array();
    for (const auto& u : ds.oriented) ori.push_back(direction_array(u));
    j["oriented"] = std::move(ori);
  }
  return j.dump(2) + "\n";
}

DirectionSet direction_set_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("direction set json: ") + e.what());
  }
  if (!j.contains("kind") || j["kind"] != "direction_set") {
    throw ParseError("direction set json: missing kind=direction_set");
  }
  DirectionSet ds;
  ds.dim = j.at("dim").get<std::size_t>();
  ds.n_points = j.at("n_points").get<std::size_t>();
  ds.pairs_examined = j.at("pairs_examined").get<std::uint64_t>();
  ds.skipped_coincident = j.at("skipped_coincident").get<std::uint64_t>();
  ds.dedup_tol = j.at("tol").get<double>();
  ds.oriented_included = j.at("oriented_included").get<bool>();
  for (const auto& arr : j.at("projective")) {
    ProjectiveDirection p;
    p.rep = direction_from_array(arr);
    if (p.dim() != ds.dim) throw ParseError("direction set json: class dimension mismatch");
    ds.projective.push_back(std::move(p));
  }
  if (ds.oriented_included && j.contains("oriented")) {
    for (const auto& arr : j.at("oriented")) ds.oriented.push_back(direction_from_array(arr));
  }
  return ds;
}

DirectionSet direction_set_from_json_file(const std::string& path) {
  return direction_set_from_json(read_text_file(path));
}

namespace {

ordered_json cap_json_body(const CapReport& cap, std::size_t dim) {
  ordered_json j;
  j["dim"] = dim;
  j["center"] = direction_array(cap.center.rep);
  j["radius"] = cap.radius;
  j["method"] = to_string(cap.method);
  j["quality"] = to_string(cap.quality);
  if (cap.method == CapMethod::sampled) {
    j["k"] = cap.sample_count;
    j["seed"] = cap.seed;
  }
  return j;
}

}  // namespace

std::string cap_report_to_json(const CapReport& cap, std::size_t dim, const JsonMeta& meta) {
  ordered_json j;
  j["tool_version"] = std::string(kToolVersion);
  j["config_echo"] = meta_json(meta);
  j["kind"] = "cap_report";
  const ordered_json body = cap_json_body(cap, dim);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j.dump(2) + "\n";
}

CapReport cap_report_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("cap report json: ") + e.what());
  }
  if (!j.contains("kind") || j["kind"] != "cap_report") {
    throw ParseError("cap report json: missing kind=cap_report");
  }
  CapReport cap;
  cap.center.rep = direction_from_array(j.at("center"));
  cap.radius = j.at("radius").get<double>();
  const std::string method = j.at("method").get<std::string>();
  if (method == "exact_gap_2d") cap.method = CapMethod::exact_gap_2d;
  else if (method == "voronoi_3d") cap.method = CapMethod::voronoi_3d;
  else if (method == "sampled") cap.method = CapMethod::sampled;
  else throw ParseError("cap report json: unknown method '" + method + "'");
  cap.quality =
      j.at("quality").get<std::string>() == "exact" ? CapQuality::exact : CapQuality::lower_bound;
  if (j.contains("k")) cap.sample_count = j.at("k").get<std::uint64_t>();
  if (j.contains("seed")) cap.seed = j.at("seed").get<std::uint64_t>();
  return cap;
}

CapReport cap_report_from_json_file(const std::string& path) {
  return cap_report_from_json(read_text_file(path));
}

std::string coverage_to_json(const CoverageCertificate& cert, std::size_t dim,
                             const JsonMeta& meta) {
  ordered_json j;
  j["tool_version"] = std::string(kToolVersion);
  j["config_echo"] = meta_json(meta);
  j["kind"] = "coverage_certificate";
  j["dim"] = dim;
  j["eps"] = cert.eps;
  j["net_density"] = cert.net_density;
  j["net_size"] = cert.net_size;
  j["covered"] = cert.covered;
  if (cert.witness) {
    j["witness"] = direction_array(cert.witness->rep);
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string classification_to_json(const Classification& c, const JsonMeta& meta,
                                   std::size_t witness_inline_limit,
                                   const std::string& witness_file) {
  ordered_json j;
  j["tool_version"] = std::string(kToolVersion);
  j["config_echo"] = meta_json(meta);
  j["kind"] = "classification";
  j["dim"] = c.dim;
  j["n_points"] = c.n_points;
  j["eps_hole"] = c.eps_hole;
  j["eps_cover"] = c.eps_cover;
  j["tol"] = c.tol;
  j["verdict"] = to_string(c.verdict);
  j["cap"] = cap_json_body(c.cap, c.dim);

  if (c.witness) {
    const GraphWitness& w = *c.witness;
    ordered_json wj;
    ordered_json rot = ordered_json::array();
    for (std::size_t r = 0; r < w.rotation.dim(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t col = 0; col < w.rotation.dim(); ++col) row.push_back(w.rotation.at(r, col));
      rot.push_back(std::move(row));
    }
    wj["rotation"] = std::move(rot);
    wj["lipschitz_constant"] = w.lipschitz_constant;
    wj["bound"] = w.bound;
    wj["n_samples"] = w.values.size();
    if (w.values.size() < witness_inline_limit) {
      ordered_json base = ordered_json::array();
      for (std::size_t i = 0; i < w.values.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t cidx = 0; cidx < w.base_dim; ++cidx) {
          row.push_back(w.base[i * w.base_dim + cidx]);
        }
        base.push_back(std::move(row));
      }
      wj["base"] = std::move(base);
      ordered_json values = ordered_json::array();
      for (const double v : w.values) values.push_back(v);
      wj["values"] = std::move(values);
    } else {
      // Large witness: samples go to a sidecar CSV next to the output.
      std::ostringstream side;
      for (std::size_t cidx = 0; cidx < w.base_dim; ++cidx) side << 'b' << cidx << ',';
      side << "value\n";
      for (std::size_t i = 0; i < w.values.size(); ++i) {
        for (std::size_t cidx = 0; cidx < w.base_dim; ++cidx) {
          side << format_double(w.base[i * w.base_dim + cidx]) << ',';
        }
        side << format_double(w.values[i]) << '\n';
      }
      write_text_file(witness_file, side.str());
      wj["witness_file"] = witness_file;
    }
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }

  if (c.cover) {
    ordered_json cj;
    cj["eps"] = c.cover->eps;
    cj["net_density"] = c.cover->net_density;
    cj["net_size"] = c.cover->net_size;
    cj["covered"] = c.cover->covered;
    if (c.cover->witness) cj["witness"] = direction_array(c.cover->witness->rep);
    else cj["witness"] = nullptr;
    j["cover"] = std::move(cj);
  } else {
    j["cover"] = nullptr;
  }

  if (c.refinement) {
    ordered_json rj;
    rj["cap_radius"] = c.refinement->cap_radius;
    rj["coverage_fraction"] = c.refinement->coverage;
    rj["note"] = c.refinement->note;
    j["refinement"] = std::move(rj);
  } else {
    j["refinement"] = nullptr;
  }
  return j.dump(2) + "\n";
}

void write_slopes_csv(std::ostream& out, const SlopeSet& slopes) {
  out << "slope\n";
  for (const double s : slopes.slopes) out << format_double(s) << '\n';
}

std::vector<double> read_slopes_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v = 0.0;
    if (!parse_double(line, v)) {
      if (line_no == 1) continue;  // header
      throw ParseError("slopes csv, line " + std::to_string(line_no) + ": non-numeric value");
    }
    out.push_back(v);
  }
  return out;
}

void write_refinement_csv(std::ostream& out, const std::vector<RefinementRow>& rows) {
  out << "depth,n,max_abs_slope,fill_eps,M\n";
  for (const RefinementRow& r : rows) {
    out << r.depth << ',' << r.n << ',' << format_double(r.max_abs_slope) << ','
        << format_double(r.fill_eps) << ',' << format_double(r.fill_bound_m) << '\n';
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace dirset
