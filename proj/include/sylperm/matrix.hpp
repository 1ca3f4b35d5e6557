#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sylperm {

// Dense exact integer matrix. Hadamard instances carry only {-1,+1};
// Kronecker intermediates such as H x I also carry 0. int64 entries keep
// products of desk-scale sign matrices exact (|entry| <= n <= 2^16).
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class size_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense storage refusal threshold (matrix order).
inline constexpr Eigen::Index kDefaultOrderLimit = Eigen::Index{1} << 16;

inline IntMatrix identity(Eigen::Index n) {
  if (n < 0) throw size_error("identity: negative order");
  return IntMatrix::Identity(n, n);
}

template <typename DerivedA, typename DerivedB>
IntMatrix matmul(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows())
    throw dimension_error("matmul: inner dimensions disagree (" +
                          std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + ")");
  return a.derived() * b.derived();
}

template <typename DerivedA, typename DerivedB>
IntMatrix kronecker(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b,
                    Eigen::Index order_limit = kDefaultOrderLimit) {
  if (a.rows() * b.rows() > order_limit || a.cols() * b.cols() > order_limit)
    throw size_error("kronecker: output order exceeds limit " +
                     std::to_string(order_limit));
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

template <typename Derived>
bool is_sign_matrix(const Eigen::MatrixBase<Derived>& m) {
  return (m.array().abs() == 1).all();
}

// H H^T = n I with entries +-1.
template <typename Derived>
bool is_hadamard(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw dimension_error("is_hadamard: not square");
  const Eigen::Index n = m.rows();
  if (!is_sign_matrix(m)) return false;
  IntMatrix g = m.derived() * m.derived().transpose();
  return g == IntMatrix(n * identity(n));
}

// First row and first column all +1.
template <typename Derived>
bool is_normalized(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw dimension_error("is_normalized: not square");
  if (m.rows() == 0) return true;
  return (m.row(0).array() == 1).all() && (m.col(0).array() == 1).all();
}

// Matrix text format: first line "n", then n lines of n space-separated
// integers from {-1,0,1}.
inline void write_matrix(std::ostream& os, const IntMatrix& m) {
  if (m.rows() != m.cols()) throw dimension_error("write_matrix: not square");
  os << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j != 0) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
}

inline IntMatrix read_matrix(std::istream& is) {
  Eigen::Index n = -1;
  if (!(is >> n) || n < 0) throw std::runtime_error("matrix text: bad order line");
  if (n > kDefaultOrderLimit) throw size_error("matrix text: order above limit");
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      std::int64_t v = 0;
      if (!(is >> v)) throw std::runtime_error("matrix text: truncated entries");
      if (v < -1 || v > 1)
        throw std::runtime_error("matrix text: entry outside {-1,0,1}");
      m(i, j) = v;
    }
  return m;
}

inline std::string matrix_to_text(const IntMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

inline IntMatrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_matrix(is);
}

}  // namespace sylperm
