#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grasstropic/rational.hpp"

namespace grasstropic {

// Variables are p_i (blank boxes) and m_i (black stones).
struct Variable {
  char kind = 'p';
  int index = 0;

  int code() const { return (kind == 'm' ? 100000 : 0) + index; }
  static Variable from_code(int c) { return c >= 100000 ? Variable{'m', c - 100000} : Variable{'p', c}; }
  std::string name() const { return std::string(1, kind) + std::to_string(index); }
  auto operator<=>(const Variable&) const = default;
};

using Monomial = std::vector<std::pair<int, int>>;  // sorted (variable code, exponent)

struct Assignment {
  std::map<int, Rational> values;  // by variable code

  void set(Variable v, const Rational& q) { values[v.code()] = q; }
  const Rational& get(int code) const;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: implicit constant
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(Variable v);
  static Polynomial parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::vector<Variable> variables() const;

  Rational evaluate(const Assignment& a) const;
  std::string to_string() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n, T(0));
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product: dimension mismatch");
    Matrix m(rows_, o.cols_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int l = 0; l < cols_; ++l) {
        const T& a = (*this)(i, l);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) m(i, j) += a * o(l, j);
      }
    return m;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<Polynomial>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix evaluate(const PolyMatrix& m, const Assignment& a);

// Fraction-free Bareiss elimination; exact over the rationals.
Rational determinant(RationalMatrix m);

}  // namespace grasstropic
