#ifndef GMMDS_FMAT_HPP
#define GMMDS_FMAT_HPP

#include <vector>

#include "gmmds/gf.hpp"

namespace gmmds {

// Dense matrix over a finite field. Entries are stored as raw element
// encodings (see gf.hpp); the field is carried along so callers cannot
// accidentally mix arithmetic from different fields.
class FMatrix {
 public:
  FMatrix(Field field, int rows, int cols);  // zero-filled

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int value);

  static FMatrix identity(const Field& field, int size);

  FMatrix mul(const FMatrix& rhs) const;

  // Gaussian elimination; square matrices only.
  int det() const;
  int rank() const;

  bool operator==(const FMatrix& rhs) const;

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<int> data_;
};

}  // namespace gmmds

#endif
