#include "hbcast/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hbcast {

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement base = *this;
  FieldElement acc(1);
  while (exponent != 0) {
    if ((exponent & 1U) != 0) acc *= base;
    base *= base;
    exponent >>= 1;
  }
  return acc;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in GF(p)");
  return pow(kModulus - 2);
}

FieldVector Matrix::column(std::size_t c) const {
  FieldVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::from_columns(std::span<const FieldVector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

namespace {

// Forward elimination in place; returns rank and accumulates the determinant sign/scale
// when `det` is non-null (only meaningful for square input).
std::size_t eliminate(Matrix& m, FieldElement* det) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) {
      if (det != nullptr) *det = FieldElement{};
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(rank, k));
      if (det != nullptr) *det = -*det;
    }
    const FieldElement p = m(rank, c);
    if (det != nullptr) *det *= p;
    const FieldElement inv = p.inverse();
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      const FieldElement f = m(r, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(Matrix m) { return eliminate(m, nullptr); }

FieldElement determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  FieldElement det(1);
  const std::size_t r = eliminate(m, &det);
  return r == m.rows() ? det : FieldElement{};
}

FieldVector ReducedBasis::reduce(FieldVector v, FieldVector* companion) const {
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    const FieldElement f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const FieldVector& b = vectors_[k];
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (!b[i].is_zero()) v[i] -= f * b[i];
    }
    if (companion != nullptr) {
      const FieldVector& bc = companions_[k];
      for (std::size_t i = 0; i < companion_length_; ++i) (*companion)[i] -= f * bc[i];
    }
  }
  return v;
}

bool ReducedBasis::insert(FieldVector v, FieldVector companion) {
  if (v.size() != dimension_) throw std::invalid_argument("ReducedBasis: dimension mismatch");
  if (companion_length_ != 0 && companion.size() != companion_length_) {
    throw std::invalid_argument("ReducedBasis: companion length mismatch");
  }
  FieldVector* comp = companion_length_ != 0 ? &companion : nullptr;
  v = reduce(std::move(v), comp);

  std::size_t pivot = 0;
  while (pivot < dimension_ && v[pivot].is_zero()) ++pivot;
  if (pivot == dimension_) return false;

  const FieldElement inv = v[pivot].inverse();
  for (auto& x : v) x *= inv;
  if (comp != nullptr) {
    for (auto& x : companion) x *= inv;
  }

  // Clear the new pivot coordinate from existing basis vectors.
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    const FieldElement f = vectors_[k][pivot];
    if (f.is_zero()) continue;
    FieldVector& b = vectors_[k];
    std::size_t nz = 0;
    for (std::size_t i = 0; i < dimension_; ++i) {
      b[i] -= f * v[i];
      if (!b[i].is_zero()) ++nz;
    }
    nonzeros_[k] = nz;
    if (comp != nullptr) {
      for (std::size_t i = 0; i < companion_length_; ++i) companions_[k][i] -= f * companion[i];
    }
  }

  std::size_t nz = 0;
  for (const auto& x : v) nz += x.is_zero() ? 0 : 1;
  vectors_.push_back(std::move(v));
  companions_.push_back(std::move(companion));
  pivots_.push_back(pivot);
  nonzeros_.push_back(nz);
  return true;
}

bool ReducedBasis::contains(const FieldVector& v) const {
  if (v.size() != dimension_) throw std::invalid_argument("ReducedBasis: dimension mismatch");
  const FieldVector r = reduce(v, nullptr);
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> ReducedBasis::unit_coordinates() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (nonzeros_[k] == 1) out.push_back(pivots_[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FieldVector> ReducedBasis::companion_of_unit(std::size_t w) const {
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    if (pivots_[k] == w && nonzeros_[k] == 1) return companions_[k];
  }
  return std::nullopt;
}

}  // namespace hbcast
