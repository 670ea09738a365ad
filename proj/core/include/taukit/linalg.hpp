#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace taukit {

// Exact scalar types. All representation-level linear algebra runs over Q;
// K0-level data is integral.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Int = long long;

// Dense rational matrix, row major. Row/column counts may be zero; empty
// matrices behave as the unique map between zero-dimensional spaces.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  bool operator==(const QMatrix& rhs) const = default;

  QMatrix transpose() const;
  QMatrix submatrix(int r0, int r1, int c0, int c1) const;  // half-open ranges
  QMatrix column(int c) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_integral() const;

  // Stacks blocks side by side (all with equal row count) / on top of each
  // other (equal column count).
  static QMatrix hstack(const std::vector<QMatrix>& blocks);
  static QMatrix vstack(const std::vector<QMatrix>& blocks);

  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

// Gauss-Jordan to reduced row echelon form. Returns pivot column indices in
// increasing order.
std::vector<int> rref_in_place(QMatrix& m);

int rank(QMatrix m);

// Columns form a basis of the right kernel. Free coordinates are assigned
// unit values in increasing index order, so the result is deterministic.
QMatrix nullspace_basis(const QMatrix& m);

// Particular solution of a x = b (matrix right-hand side), free variables
// zero. nullopt when inconsistent.
std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b);

std::optional<QMatrix> inverse(const QMatrix& m);

// Dense integer matrix, row major, used for K0 data (Cartan matrices,
// dimension vectors as columns, tau-map witnesses).
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}

  static IntMatrix identity(int n);

  Int& operator()(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  Int operator()(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_identity() const;
  QMatrix to_rational() const;
  std::string to_string() const;
};

std::optional<IntMatrix> to_integer(const QMatrix& m);

// Integer solution of D x = b, or nullopt when no integral solution exists.
// Column Hermite reduction with unimodular bookkeeping; free coordinates of
// the reduced system are set to zero, so the answer is deterministic.
// Intermediate arithmetic is arbitrary precision.
std::optional<std::vector<Int>> solve_integer(const std::vector<std::vector<Int>>& d,
                                              const std::vector<Int>& b);

}  // namespace taukit
