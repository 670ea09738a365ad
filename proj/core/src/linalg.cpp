#include "taukit/linalg.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace taukit {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  QMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) == 0) continue;
        out(i, j) += v * rhs(k, j);
      }
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  QMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  QMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

QMatrix QMatrix::submatrix(int r0, int r1, int c0, int c1) const {
  QMatrix out(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) out(i - r0, j - c0) = (*this)(i, j);
  return out;
}

QMatrix QMatrix::column(int c) const { return submatrix(0, rows_, c, c + 1); }

bool QMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

bool QMatrix::is_integral() const {
  for (const auto& v : data_)
    if (denominator(v) != 1) return false;
  return true;
}

QMatrix QMatrix::hstack(const std::vector<QMatrix>& blocks) {
  int r = blocks.empty() ? 0 : blocks[0].rows();
  int c = 0;
  for (const auto& b : blocks) {
    if (b.rows() != r) throw std::invalid_argument("hstack row mismatch");
    c += b.cols();
  }
  QMatrix out(r, c);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
    off += b.cols();
  }
  return out;
}

QMatrix QMatrix::vstack(const std::vector<QMatrix>& blocks) {
  int c = blocks.empty() ? 0 : blocks[0].cols();
  int r = 0;
  for (const auto& b : blocks) {
    if (b.cols() != c) throw std::invalid_argument("vstack column mismatch");
    r += b.rows();
  }
  QMatrix out(r, c);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < c; ++j) out(off + i, j) = b(i, j);
    off += b.rows();
  }
  return out;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::vector<int> rref_in_place(QMatrix& m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
    int p = -1;
    for (int r = lead; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != lead)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead, j));
    Rat inv = Rat(1) / m(lead, c);
    for (int j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      Rat f = m(r, c);
      for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref_in_place(m).size()); }

QMatrix nullspace_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  int k = m.cols() - static_cast<int>(pivots.size());
  QMatrix basis(m.cols(), k);
  int col = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, col) = 1;
    for (size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], col) = -r(static_cast<int>(i), free);
    ++col;
  }
  return basis;
}

std::optional<QMatrix> solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  QMatrix aug = QMatrix::hstack({a, b});
  std::vector<int> pivots = rref_in_place(aug);
  // Any pivot inside the right-hand block certifies inconsistency.
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  QMatrix x(a.cols(), b.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(static_cast<int>(i), a.cols() + j);
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, QMatrix::identity(m.rows()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      Int v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out(i, j) += v * rhs(k, j);
    }
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if ((*this)(i, j) != ((i == j) ? 1 : 0)) return false;
  return true;
}

QMatrix IntMatrix::to_rational() const {
  QMatrix out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::optional<IntMatrix> to_integer(const QMatrix& m) {
  if (!m.is_integral()) return std::nullopt;
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = static_cast<Int>(numerator(m(i, j)));
  return out;
}

namespace {

// Column Hermite reduction of h with the same column operations mirrored on
// u, so h_original * u == h at every step. Produces a column echelon shape.
struct HermiteState {
  std::vector<std::vector<BigInt>> h;  // k x n
  std::vector<std::vector<BigInt>> u;  // n x n unimodular
  std::vector<int> pivot_row_of_col;   // per echelon column
};

HermiteState hermite_columns(const std::vector<std::vector<Int>>& d) {
  int k = static_cast<int>(d.size());
  int n = k == 0 ? 0 : static_cast<int>(d[0].size());
  HermiteState s;
  s.h.assign(k, std::vector<BigInt>(n));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) s.h[i][j] = d[i][j];
  s.u.assign(n, std::vector<BigInt>(n));
  for (int j = 0; j < n; ++j) s.u[j][j] = 1;

  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < k; ++i) std::swap(s.h[i][a], s.h[i][b]);
    for (int i = 0; i < n; ++i) std::swap(s.u[i][a], s.u[i][b]);
  };
  auto axpy_col = [&](int dst, int src, const BigInt& f) {
    // col_dst += f * col_src
    for (int i = 0; i < k; ++i) s.h[i][dst] += f * s.h[i][src];
    for (int i = 0; i < n; ++i) s.u[i][dst] += f * s.u[i][src];
  };
  auto negate_col = [&](int c) {
    for (int i = 0; i < k; ++i) s.h[i][c] = -s.h[i][c];
    for (int i = 0; i < n; ++i) s.u[i][c] = -s.u[i][c];
  };

  int lead = 0;
  for (int r = 0; r < k && lead < n; ++r) {
    // Euclidean elimination across columns lead..n-1 on row r.
    while (true) {
      int best = -1;
      for (int c = lead; c < n; ++c) {
        if (s.h[r][c] == 0) continue;
        if (best < 0 || abs(s.h[r][c]) < abs(s.h[r][best])) best = c;
      }
      if (best < 0) break;
      if (best != lead) swap_cols(best, lead);
      bool clean = true;
      for (int c = lead + 1; c < n; ++c) {
        if (s.h[r][c] == 0) continue;
        BigInt q = s.h[r][c] / s.h[r][lead];
        axpy_col(c, lead, -q);
        if (s.h[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (s.h[r][lead] != 0) {
      if (s.h[r][lead] < 0) negate_col(lead);
      s.pivot_row_of_col.push_back(r);
      ++lead;
    }
  }
  return s;
}

}  // namespace

std::optional<std::vector<Int>> solve_integer(const std::vector<std::vector<Int>>& d,
                                              const std::vector<Int>& b) {
  int k = static_cast<int>(d.size());
  if (static_cast<int>(b.size()) != k) throw std::invalid_argument("solve_integer shape mismatch");
  int n = k == 0 ? 0 : static_cast<int>(d[0].size());
  for (const auto& row : d)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("ragged rows");

  HermiteState s = hermite_columns(d);
  int pcols = static_cast<int>(s.pivot_row_of_col.size());

  // Forward solve h y = b; non-pivot coordinates of y stay zero.
  std::vector<BigInt> y(n, 0), resid(k);
  for (int i = 0; i < k; ++i) resid[i] = b[i];
  for (int c = 0; c < pcols; ++c) {
    int r = s.pivot_row_of_col[c];
    if (resid[r] % s.h[r][c] != 0) return std::nullopt;
    y[c] = resid[r] / s.h[r][c];
    if (y[c] != 0)
      for (int i = 0; i < k; ++i) resid[i] -= y[c] * s.h[i][c];
  }
  for (int i = 0; i < k; ++i)
    if (resid[i] != 0) return std::nullopt;

  std::vector<Int> x(n, 0);
  for (int i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < n; ++j)
      if (y[j] != 0) acc += s.u[i][j] * y[j];
    if (acc > std::numeric_limits<Int>::max() || acc < std::numeric_limits<Int>::min())
      throw std::overflow_error("integer solution exceeds 64-bit range");
    x[i] = static_cast<Int>(acc);
  }
  return x;
}

}  // namespace taukit
