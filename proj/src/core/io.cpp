#include "core/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "core/zernike.hpp"

namespace zernlets {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

std::string trimmed(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) fields.push_back(trimmed(item));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& field, const std::string& path, int line) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size())
    throw io_error(path + ":" + std::to_string(line) + ": bad number '" + field + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_points_csv(const std::string& path, const std::vector<PolarPoint>& points) {
  auto out = open_out(path);
  out << "j,rho,theta\n";
  for (size_t j = 0; j < points.size(); ++j)
    out << j << ',' << format_double(points[j].rho) << ','
        << format_double(points[j].theta) << '\n';
  finish(out, path);
}

void write_samples_csv(const std::string& path, const DiskSamples& samples) {
  auto out = open_out(path);
  out << "r,theta,z\n";
  for (int i = 0; i < samples.count(); ++i)
    out << format_double(samples.points[i].rho) << ','
        << format_double(samples.points[i].theta) << ','
        << format_double(samples.values[i]) << '\n';
  finish(out, path);
}

DiskSamples ingest_samples(const std::string& path, bool normalize_radius) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open: " + path);

  std::string line;
  int lineno = 0;
  bool cartesian = false;
  bool have_header = false;
  std::vector<PolarPoint> points;
  std::vector<double> values;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trimmed(line).empty()) continue;
    if (!have_header) {
      std::string header = trimmed(line);
      std::transform(header.begin(), header.end(), header.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      const auto fields = split_fields(header);
      if (fields == std::vector<std::string>{"x", "y", "z"})
        cartesian = true;
      else if (fields == std::vector<std::string>{"r", "theta", "z"})
        cartesian = false;
      else
        throw io_error(path + ":" + std::to_string(lineno) +
                       ": expected header x,y,z or r,theta,z");
      have_header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 3)
      throw io_error(path + ":" + std::to_string(lineno) + ": expected 3 fields, got " +
                     std::to_string(fields.size()));
    const double a = parse_double(fields[0], path, lineno);
    const double b = parse_double(fields[1], path, lineno);
    const double z = parse_double(fields[2], path, lineno);
    PolarPoint pt = cartesian ? polar_from_xy(a, b) : PolarPoint{a, b};
    if (!cartesian && pt.rho < 0.0)
      throw io_error(path + ":" + std::to_string(lineno) + ": negative radius");
    points.push_back(pt);
    values.push_back(z);
  }
  if (!have_header) throw io_error(path + ": empty file");
  if (points.empty()) throw io_error(path + ": no data rows");

  if (normalize_radius) {
    double rmax = 0.0;
    for (const auto& p : points) rmax = std::max(rmax, p.rho);
    if (rmax > 0.0)
      for (auto& p : points) p.rho /= rmax;
  } else {
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i].rho > 1.0 + 1e-12)
        throw io_error(path + ": radius " + format_double(points[i].rho) +
                       " outside the unit disk (pass the normalization flag to rescale)");
  }
  return make_samples(std::move(points),
                      Eigen::Map<Eigen::VectorXd>(values.data(), values.size()));
}

void write_coeffs_csv(const std::string& path, const FitResult& fit) {
  DiskPolynomial p;
  p.max_degree = fit.degree;
  p.coeffs = real_basis_to_complex(fit.coeffs);
  const RealCoeffs rc = complex_to_real_coeffs(p);

  auto out = open_out(path);
  out << "j,n,m,A,B\n";
  for (const auto& row : rc.rows)
    out << index_pack(row.n, row.m) << ',' << row.n << ',' << row.m << ','
        << format_double(row.A) << ',' << format_double(row.B) << '\n';
  finish(out, path);
}

void write_fit_summary_json(const std::string& path, const FitResult& fit) {
  nlohmann::ordered_json j;
  j["degree"] = fit.degree;
  j["basis_size"] = space_dim(fit.degree);
  j["sample_count"] = fit.sample_count;
  j["residual_l2"] = fit.residual_l2;
  j["residual_rms"] = fit.residual_rms;
  j["design_condition"] = fit.design_condition;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

void write_decomposition_csv(const std::string& path, const Decomposition& d,
                             const MultiscaleBasis& basis) {
  if (d.levels != basis.ladder.levels)
    throw std::invalid_argument("write_decomposition_csv: level mismatch");
  auto out = open_out(path);
  out << "level,slot,mu,omega,re,im\n";
  out << "-1,0,,," << format_double(d.v0.real()) << ','
      << format_double(d.v0.imag()) << '\n';
  for (size_t li = 0; li < d.levels.size(); ++li) {
    const auto& points = basis.bases[li].parameters.points;
    for (int s = 0; s < d.coefficients[li].size(); ++s)
      out << d.levels[li] << ',' << s << ',' << format_double(points[s].rho) << ','
          << format_double(points[s].theta) << ','
          << format_double(d.coefficients[li][s].real()) << ','
          << format_double(d.coefficients[li][s].imag()) << '\n';
  }
  finish(out, path);
}

void write_grid_csv(const std::string& path, int res,
                    const std::function<double(const PolarPoint&)>& field) {
  if (res <= 0) throw std::invalid_argument("write_grid_csv: resolution must be positive");
  auto out = open_out(path);
  out << "x,y,value\n";
  const int angular = 4 * res;
  for (int i = 0; i < res; ++i) {
    const double r = (i + 0.5) / res;
    for (int k = 0; k < angular; ++k) {
      const PolarPoint pt{r, 2.0 * std::numbers::pi * k / angular};
      out << format_double(polar_x(pt)) << ',' << format_double(polar_y(pt)) << ','
          << format_double(field(pt)) << '\n';
    }
  }
  finish(out, path);
}

}  // namespace zernlets
