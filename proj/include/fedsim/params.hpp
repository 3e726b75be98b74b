#pragma once

// Flat parameter vector shared by the model and the FL strategies
// (weights w, control variates c / c_i are all parameter-shaped), plus
// the checkpoint wire format: u32 little-endian length followed by
// little-endian IEEE-754 doubles.

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fedsim/errors.hpp"

namespace fedsim {

struct ParameterVector {
  std::vector<double> values;

  ParameterVector() = default;
  explicit ParameterVector(std::size_t n, double fill = 0.0) : values(n, fill) {}

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  auto begin() { return values.begin(); }
  auto end() { return values.end(); }
  auto begin() const { return values.begin(); }
  auto end() const { return values.end(); }

  ParameterVector& operator+=(const ParameterVector& o) {
    require_same_size(o, "+=");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
  }
  ParameterVector& operator-=(const ParameterVector& o) {
    require_same_size(o, "-=");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
    return *this;
  }
  ParameterVector& operator*=(double s) {
    for (auto& v : values) v *= s;
    return *this;
  }

  // this += alpha * x
  void axpy(double alpha, const ParameterVector& x) {
    require_same_size(x, "axpy");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += alpha * x.values[i];
  }

  double norm() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (double v : values)
      if (!std::isfinite(v)) return false;
    return true;
  }

  void require_same_size(const ParameterVector& o, const char* op) const {
    if (values.size() != o.values.size()) {
      throw ConfigError(std::string("ParameterVector ") + op + ": length mismatch (" +
                        std::to_string(values.size()) + " vs " +
                        std::to_string(o.values.size()) + ")");
    }
  }
};

inline ParameterVector operator+(ParameterVector a, const ParameterVector& b) {
  a += b;
  return a;
}
inline ParameterVector operator-(ParameterVector a, const ParameterVector& b) {
  a -= b;
  return a;
}
inline ParameterVector operator*(double s, ParameterVector a) {
  a *= s;
  return a;
}

inline double distance(const ParameterVector& a, const ParameterVector& b) {
  a.require_same_size(b, "distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// --- checkpoint serialization -------------------------------------------

namespace detail {

inline void write_u32_le(std::ostream& os, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 4);
}

inline std::uint32_t read_u32_le(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw IoError("checkpoint: truncated length prefix");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

inline void write_f64_le(std::ostream& os, double d) {
  const std::uint64_t v = std::bit_cast<std::uint64_t>(d);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  os.write(b, 8);
}

inline double read_f64_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw IoError("checkpoint: truncated value");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

}  // namespace detail

inline void write_param_blob(std::ostream& os, const ParameterVector& p) {
  detail::write_u32_le(os, static_cast<std::uint32_t>(p.size()));
  for (double v : p.values) detail::write_f64_le(os, v);
}

inline ParameterVector read_param_blob(std::istream& is) {
  const std::uint32_t n = detail::read_u32_le(is);
  ParameterVector p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = detail::read_f64_le(is);
  return p;
}

inline void save_params(const std::filesystem::path& path, const ParameterVector& p) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path.string());
  write_param_blob(os, p);
  if (!os) throw IoError("write failed: " + path.string());
}

inline ParameterVector load_params(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path.string());
  return read_param_blob(is);
}

}  // namespace fedsim
