#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace qid {

// Exact integer frequency vector on the lifted lattice Z^M.  Equality and
// ordering are defined on the integer coefficients only; real embeddings are
// always derived through a GeneratorSystem, never stored here.
class Frequency {
 public:
  Frequency() = default;
  explicit Frequency(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  static Frequency zero(std::size_t rank) {
    return Frequency(std::vector<std::int64_t>(rank, 0));
  }

  std::size_t rank() const { return coeffs_.size(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (auto v : coeffs_)
      if (v != 0) return false;
    return true;
  }

  std::int64_t max_abs() const {
    std::int64_t m = 0;
    for (auto v : coeffs_) m = std::max(m, std::abs(v));
    return m;
  }

  // Euclidean norm of the integer coefficient vector.
  double norm2() const {
    double s = 0.0;
    for (auto v : coeffs_) s += static_cast<double>(v) * static_cast<double>(v);
    return std::sqrt(s);
  }

  friend Frequency operator+(const Frequency& a, const Frequency& b) {
    check_rank(a, b);
    std::vector<std::int64_t> out(a.coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
    return Frequency(std::move(out));
  }

  friend Frequency operator-(const Frequency& a, const Frequency& b) {
    check_rank(a, b);
    std::vector<std::int64_t> out(a.coeffs_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
    return Frequency(std::move(out));
  }

  Frequency operator-() const {
    std::vector<std::int64_t> out(coeffs_);
    for (auto& v : out) v = -v;
    return Frequency(std::move(out));
  }

  friend bool operator==(const Frequency&, const Frequency&) = default;
  friend auto operator<=>(const Frequency& a, const Frequency& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coeffs_[i]);
    }
    s += "]";
    return s;
  }

 private:
  static void check_rank(const Frequency& a, const Frequency& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("frequency rank mismatch");
  }

  std::vector<std::int64_t> coeffs_;
};

}  // namespace qid
