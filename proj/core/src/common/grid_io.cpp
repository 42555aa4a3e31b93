#include "ssblow/grid_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ssblow/errors.hpp"

namespace ssblow {
namespace {

void put(std::ostream& out, double v) { out.write(reinterpret_cast<const char*>(&v), sizeof v); }

double get(std::istream& in) {
  double v = 0.0;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) throw ParseError("truncated binary grid");
  return v;
}

std::size_t as_dim(double v) {
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e12) throw ParseError("bad grid dimension");
  return static_cast<std::size_t>(v);
}

}  // namespace

void write_grid_binary(std::ostream& out, const ScalarField2D& field) {
  put(out, static_cast<double>(field.nx()));
  put(out, static_cast<double>(field.ny()));
  put(out, field.hx());
  put(out, field.hy());
  out.write(reinterpret_cast<const char*>(field.data().data()),
            static_cast<std::streamsize>(field.size() * sizeof(double)));
}

ScalarField2D read_grid_binary(std::istream& in) {
  const std::size_t nx = as_dim(get(in));
  const std::size_t ny = as_dim(get(in));
  const double hx = get(in);
  const double hy = get(in);
  ScalarField2D field(nx, ny, 0.0, 0.0, hx, hy);
  if (!in.read(reinterpret_cast<char*>(field.data().data()),
               static_cast<std::streamsize>(field.size() * sizeof(double)))) {
    throw ParseError("truncated binary grid payload");
  }
  return field;
}

void write_grid_binary(const std::filesystem::path& path, const ScalarField2D& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_grid_binary(out, field);
}

ScalarField2D read_grid_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return read_grid_binary(in);
}

void write_grid_csv(std::ostream& out, const ScalarField2D& field) {
  out << "x,y,value\n" << std::setprecision(17);
  for (std::size_t i = 0; i < field.nx(); ++i) {
    for (std::size_t j = 0; j < field.ny(); ++j) {
      out << field.x(i) << ',' << field.y(j) << ',' << field(i, j) << '\n';
    }
  }
}

ScalarField2D read_grid_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("x,y,value", 0) != 0) {
    throw ParseError("grid CSV must start with header x,y,value");
  }
  struct Row {
    double x, y, v;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    Row r{};
    char c1 = 0, c2 = 0;
    if (!(ss >> r.x >> c1 >> r.y >> c2 >> r.v) || c1 != ',' || c2 != ',') {
      throw ParseError("bad grid CSV line: " + line);
    }
    rows.push_back(r);
  }
  if (rows.empty()) return {};
  std::map<double, std::size_t> xs, ys;
  for (const auto& r : rows) {
    xs.emplace(r.x, 0);
    ys.emplace(r.y, 0);
  }
  if (xs.size() * ys.size() != rows.size()) throw ParseError("grid CSV is not a full tensor grid");
  std::size_t k = 0;
  for (auto& [x, idx] : xs) idx = k++;
  k = 0;
  for (auto& [y, idx] : ys) idx = k++;
  const double hx = xs.size() > 1 ? (xs.rbegin()->first - xs.begin()->first) / double(xs.size() - 1) : 1.0;
  const double hy = ys.size() > 1 ? (ys.rbegin()->first - ys.begin()->first) / double(ys.size() - 1) : 1.0;
  ScalarField2D field(xs.size(), ys.size(), xs.begin()->first, ys.begin()->first, hx, hy);
  for (const auto& r : rows) field(xs[r.x], ys[r.y]) = r.v;
  return field;
}

}  // namespace ssblow
