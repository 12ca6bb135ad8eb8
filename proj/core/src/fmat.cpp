#include "gmmds/fmat.hpp"

#include "gmmds/errors.hpp"

namespace gmmds {

FMatrix::FMatrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(Errc::invalid_argument, "matrix dimensions must be non-negative");
  data_.assign(static_cast<size_t>(rows) * cols, 0);
}

void FMatrix::set(int r, int c, int value) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error(Errc::invalid_argument, "matrix index out of range");
  if (value < 0 || value >= field_.q())
    throw Error(Errc::invalid_argument, "entry is not a valid field element");
  data_[static_cast<size_t>(r) * cols_ + c] = value;
}

FMatrix FMatrix::identity(const Field& field, int size) {
  FMatrix m(field, size, size);
  for (int i = 0; i < size; ++i) m.set(i, i, 1);
  return m;
}

FMatrix FMatrix::mul(const FMatrix& rhs) const {
  if (!(field_ == rhs.field_))
    throw Error(Errc::field_mismatch, "matrix product across different fields");
  if (cols_ != rhs.rows_)
    throw Error(Errc::dimension_mismatch, "inner dimensions do not match");
  FMatrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int t = 0; t < cols_; ++t) {
      const int a = at(i, t);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const int prod = field_.mul(a, rhs.at(t, j));
        out.data_[static_cast<size_t>(i) * out.cols_ + j] =
            field_.add(out.at(i, j), prod);
      }
    }
  return out;
}

namespace {

// Row-echelon pass over a working copy; returns rank and, for square
// inputs, accumulates the determinant into *det_out.
int eliminate(const Field& f, std::vector<int>& a, int rows, int cols, int* det_out) {
  int det = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<size_t>(r) * cols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != rank) {
      for (int c = 0; c < cols; ++c)
        std::swap(a[static_cast<size_t>(pivot) * cols + c],
                  a[static_cast<size_t>(rank) * cols + c]);
      det = f.neg(det);
    }
    const int pv = a[static_cast<size_t>(rank) * cols + col];
    det = f.mul(det, pv);
    const int pv_inv = f.inv(pv);
    for (int r = rank + 1; r < rows; ++r) {
      const int lead = a[static_cast<size_t>(r) * cols + col];
      if (lead == 0) continue;
      const int factor = f.mul(lead, pv_inv);
      for (int c = col; c < cols; ++c) {
        const int sub = f.mul(factor, a[static_cast<size_t>(rank) * cols + c]);
        auto& cell = a[static_cast<size_t>(r) * cols + c];
        cell = f.sub(cell, sub);
      }
    }
    ++rank;
  }
  if (det_out) *det_out = (rank == rows && rows == cols) ? det : 0;
  return rank;
}

}  // namespace

int FMatrix::det() const {
  if (rows_ != cols_)
    throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
  std::vector<int> work = data_;
  int d = 0;
  eliminate(field_, work, rows_, cols_, &d);
  return d;
}

int FMatrix::rank() const {
  std::vector<int> work = data_;
  return eliminate(field_, work, rows_, cols_, nullptr);
}

bool FMatrix::operator==(const FMatrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
         data_ == rhs.data_;
}

}  // namespace gmmds
