#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hbcast {

/// Element of GF(p) with p = 2^31 - 1.
class FieldElement {
 public:
  static constexpr std::uint32_t kModulus = 2147483647U;

  constexpr FieldElement() = default;
  /// Reduces any unsigned value mod p.
  constexpr explicit FieldElement(std::uint64_t v) : value_(reduce(v)) {}

  constexpr std::uint32_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) {
    std::uint32_t s = a.value_ + b.value_;  // < 2^32
    if (s >= kModulus) s -= kModulus;
    return raw(s);
  }
  friend constexpr FieldElement operator-(FieldElement a, FieldElement b) {
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + kModulus - b.value_);
  }
  friend constexpr FieldElement operator-(FieldElement a) { return FieldElement{} - a; }
  friend constexpr FieldElement operator*(FieldElement a, FieldElement b) {
    return FieldElement(static_cast<std::uint64_t>(a.value_) * b.value_);
  }
  FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
  FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
  FieldElement& operator*=(FieldElement o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;

 private:
  static constexpr FieldElement raw(std::uint32_t v) {
    FieldElement f;
    f.value_ = v;
    return f;
  }
  // Mersenne reduction: 2^31 ≡ 1 (mod p).
  static constexpr std::uint32_t reduce(std::uint64_t v) {
    v = (v & kModulus) + (v >> 31);
    v = (v & kModulus) + (v >> 31);
    return static_cast<std::uint32_t>(v >= kModulus ? v - kModulus : v);
  }

  std::uint32_t value_ = 0;
};

using FieldVector = std::vector<FieldElement>;

/// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  FieldVector column(std::size_t c) const;
  /// Builds a matrix whose columns are the given equal-length vectors.
  static Matrix from_columns(std::span<const FieldVector> columns, std::size_t rows);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

std::size_t rank(Matrix m);
FieldElement determinant(Matrix m);

/// Incrementally maintained reduced echelon basis of a subspace of GF(p)^dimension.
///
/// Each basis vector has a pivot coordinate (its first nonzero entry at insertion time)
/// holding 1, and every other basis vector is zero at that coordinate. With this shape a
/// unit vector e_w lies in the span iff some basis vector equals e_w.
///
/// Optionally every vector carries a companion vector (e.g. the payload it encodes) that
/// undergoes the same elementary operations, so a basis vector equal to e_w carries the
/// payload of segment w.
class ReducedBasis {
 public:
  explicit ReducedBasis(std::size_t dimension, std::size_t companion_length = 0)
      : dimension_(dimension), companion_length_(companion_length) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return vectors_.size(); }

  /// Returns true when the vector was independent of the current span.
  bool insert(FieldVector v, FieldVector companion = {});
  bool contains(const FieldVector& v) const;

  /// Coordinates w whose unit vector lies in the span, ascending.
  std::vector<std::size_t> unit_coordinates() const;

  /// Companion of the basis vector equal to e_w, if e_w is in the span.
  std::optional<FieldVector> companion_of_unit(std::size_t w) const;

 private:
  FieldVector reduce(FieldVector v, FieldVector* companion) const;

  std::size_t dimension_;
  std::size_t companion_length_;
  std::vector<FieldVector> vectors_;
  std::vector<FieldVector> companions_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> nonzeros_;  // per basis vector
};

}  // namespace hbcast
