#include "vartraj/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vartraj/errors.hpp"

namespace vartraj::io {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_field(const std::string& field, std::size_t row, std::size_t col,
                   const std::string& path) {
  const char* b = field.data();
  const char* e = b + field.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (*(e - 1) == ' ' || *(e - 1) == '\t')) --e;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e)
    throw ValidationError(path + ": row " + std::to_string(row) + ", column " +
                          std::to_string(col + 1) + ": cannot parse '" + field + "'");
  return v;
}

}  // namespace

std::string format_full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Csv read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + ": empty file");
  Csv csv;
  csv.header = split_line(line);
  const std::size_t cols = csv.header.size();

  std::vector<std::vector<double>> rows;
  std::size_t rowno = 1;
  while (std::getline(in, line)) {
    ++rowno;
    if (line.empty()) continue;
    auto fields = split_line(line);
    if (fields.size() != cols)
      throw ValidationError(path + ": row " + std::to_string(rowno) + ": expected " +
                            std::to_string(cols) + " columns, got " +
                            std::to_string(fields.size()));
    std::vector<double> vals(cols);
    for (std::size_t c = 0; c < cols; ++c) vals[c] = parse_field(fields[c], rowno, c, path);
    rows.push_back(std::move(vals));
  }
  csv.data.resize(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) csv.data(r, c) = rows[r][c];
  return csv;
}

Csv read_csv(const std::string& path, const std::vector<std::string>& expect_header) {
  Csv csv = read_csv(path);
  if (csv.header != expect_header) {
    std::string want;
    for (std::size_t i = 0; i < expect_header.size(); ++i)
      want += (i ? "," : "") + expect_header[i];
    std::string got;
    for (std::size_t i = 0; i < csv.header.size(); ++i) got += (i ? "," : "") + csv.header[i];
    throw ValidationError(path + ": expected header '" + want + "', got '" + got + "'");
  }
  return csv;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Eigen::MatrixXd& data) {
  if (static_cast<Eigen::Index>(header.size()) != data.cols())
    throw ValidationError(path + ": header/data column mismatch");
  std::ofstream out(path, std::ios::binary);  // binary: keep LF on every platform
  if (!out) throw ValidationError(path + ": cannot open for writing");
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (Eigen::Index r = 0; r < data.rows(); ++r) {
    for (Eigen::Index c = 0; c < data.cols(); ++c)
      out << (c ? "," : "") << format_full(data(r, c));
    out << "\n";
  }
  if (!out) throw ValidationError(path + ": write failed");
}

reparam::MonotoneMap read_monotone_map(const std::string& path) {
  Csv csv = read_csv(path, {"x", "y"});
  try {
    return reparam::MonotoneMap(csv.data.col(0), csv.data.col(1));
  } catch (const Error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_monotone_map(const std::string& path, const reparam::MonotoneMap& map) {
  Eigen::MatrixXd data(map.nodes(), 2);
  data.col(0) = map.grid();
  data.col(1) = map.values();
  write_csv(path, {"x", "y"}, data);
}

reparam::SampledPath read_sampled_path(const std::string& path) {
  Csv csv = read_csv(path);
  if (csv.header.size() < 2 || csv.header[0] != "t")
    throw ValidationError(path + ": expected header 't,x0,x1,...'");
  for (std::size_t i = 1; i < csv.header.size(); ++i)
    if (csv.header[i] != "x" + std::to_string(i - 1))
      throw ValidationError(path + ": expected column " + std::to_string(i + 1) +
                            " to be named 'x" + std::to_string(i - 1) + "'");
  try {
    return reparam::SampledPath(csv.data.col(0), csv.data.rightCols(csv.data.cols() - 1));
  } catch (const Error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_sampled_path(const std::string& path, const reparam::SampledPath& p) {
  std::vector<std::string> header{"t"};
  for (Eigen::Index c = 0; c < p.X.cols(); ++c) header.push_back("x" + std::to_string(c));
  Eigen::MatrixXd data(p.t.size(), 1 + p.X.cols());
  data.col(0) = p.t;
  data.rightCols(p.X.cols()) = p.X;
  write_csv(path, header, data);
}

frenet::SampledCurve read_curve(const std::string& path) {
  Csv csv = read_csv(path, {"s", "x", "y", "z"});
  try {
    return frenet::SampledCurve(csv.data.col(0), csv.data.rightCols(3));
  } catch (const Error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_curve(const std::string& path, const frenet::SampledCurve& c) {
  Eigen::MatrixXd data(c.s.size(), 4);
  data.col(0) = c.s;
  data.rightCols(3) = c.x;
  write_csv(path, {"s", "x", "y", "z"}, data);
}

void write_frames(const std::string& path, const frenet::FrenetApparatus& app,
                  const Eigen::VectorXd& theta) {
  const Eigen::Index n = app.s.size();
  if (theta.size() != n) throw ValidationError(path + ": roll profile grid mismatch");
  Eigen::MatrixXd data(n, 13);
  data.col(0) = app.s;
  data.middleCols(1, 3) = app.tangent;
  data.middleCols(4, 3) = app.normal;
  data.middleCols(7, 3) = app.binormal;
  data.col(10) = app.curvature;
  data.col(11) = app.torsion;
  data.col(12) = theta;
  write_csv(path,
            {"s", "tx", "ty", "tz", "nx", "ny", "nz", "bx", "by", "bz", "kappa", "tau", "theta"},
            data);
}

hyperbolic::HalfPlanePath read_half_plane_path(const std::string& path) {
  Csv csv = read_csv(path, {"t", "x1", "x2"});
  try {
    return hyperbolic::HalfPlanePath(csv.data.col(0), csv.data.rightCols(2));
  } catch (const Error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_half_plane_path(const std::string& path, const hyperbolic::HalfPlanePath& p) {
  Eigen::MatrixXd data(p.t.size(), 3);
  data.col(0) = p.t;
  data.rightCols(2) = p.x;
  write_csv(path, {"t", "x1", "x2"}, data);
}

namespace {

std::vector<std::string> rotation_header() {
  std::vector<std::string> h;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) h.push_back("R" + std::to_string(r) + std::to_string(c));
  return h;
}

void fill_rotation(Eigen::MatrixXd& data, Eigen::Index row, Eigen::Index col0,
                   const Eigen::Matrix3d& R) {
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) data(row, col0 + 3 * r + c) = R(r, c);
}

}  // namespace

void write_rotation_trajectory(const std::string& path, const Eigen::VectorXd& t,
                               const std::vector<Eigen::Matrix3d>& R) {
  std::vector<std::string> header{"t"};
  for (auto& h : rotation_header()) header.push_back(h);
  Eigen::MatrixXd data(t.size(), 10);
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    data(i, 0) = t[i];
    fill_rotation(data, i, 1, R[i]);
  }
  write_csv(path, header, data);
}

void write_pose_trajectory(const std::string& path, const Eigen::VectorXd& t,
                           const std::vector<Eigen::Matrix3d>& R,
                           const Eigen::MatrixXd& translation) {
  std::vector<std::string> header{"t"};
  for (auto& h : rotation_header()) header.push_back(h);
  header.insert(header.end(), {"tx", "ty", "tz"});
  Eigen::MatrixXd data(t.size(), 13);
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    data(i, 0) = t[i];
    fill_rotation(data, i, 1, R[i]);
    data(i, 10) = translation(i, 0);
    data(i, 11) = translation(i, 1);
    data(i, 12) = translation(i, 2);
  }
  write_csv(path, header, data);
}

void write_omega_trajectory(const std::string& path, const Eigen::VectorXd& t,
                            const Eigen::MatrixXd& omega,
                            const std::vector<Eigen::Matrix3d>* R) {
  std::vector<std::string> header{"t", "wx", "wy", "wz"};
  Eigen::Index cols = 4;
  if (R) {
    for (auto& h : rotation_header()) header.push_back(h);
    cols += 9;
  }
  Eigen::MatrixXd data(t.size(), cols);
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    data(i, 0) = t[i];
    data(i, 1) = omega(i, 0);
    data(i, 2) = omega(i, 1);
    data(i, 3) = omega(i, 2);
    if (R) fill_rotation(data, i, 4, (*R)[i]);
  }
  write_csv(path, header, data);
}

}  // namespace vartraj::io
