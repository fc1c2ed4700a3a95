#ifndef POLYREAL_MATRIX_HPP
#define POLYREAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "polyreal/rational.hpp"

namespace polyreal {

/// Dense matrix of exact rationals, row-major.
class MatrixQ {
 public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}
  MatrixQ(std::initializer_list<std::initializer_list<Rational>> rows);

  static MatrixQ identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> col(std::size_t c) const;

  MatrixQ transposed() const;
  MatrixQ operator*(const MatrixQ& other) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  bool operator==(const MatrixQ& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Exact determinant by Gaussian elimination with exact pivoting.
/// Throws on non-square input.
Rational det(const MatrixQ& m);

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(MatrixQ& m);

std::size_t rank(const MatrixQ& m);

/// Basis of the right null space {x : m x = 0}.
std::vector<std::vector<Rational>> null_space(const MatrixQ& m);

/// Exact description of the solution set of a x = b.
struct LinearSolution {
  enum class Kind { unique, inconsistent, affine_family };
  Kind kind = Kind::inconsistent;
  std::vector<Rational> particular;            // empty iff inconsistent
  std::vector<std::vector<Rational>> basis;    // homogeneous directions (affine_family)

  bool solvable() const { return kind != Kind::inconsistent; }
};

LinearSolution solve_linear(const MatrixQ& a, const std::vector<Rational>& b);

MatrixQ inverse(const MatrixQ& m);  // throws on singular input

}  // namespace polyreal

#endif  // POLYREAL_MATRIX_HPP
