#pragma once

// Exact integer vectors and matrices, Smith normal form, and finite quotients
// of full-rank lattices. All arithmetic goes through sgring::checked.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgring/arith.hpp"

namespace sgring {

class IntVector {
public:
  IntVector() = default;
  explicit IntVector(std::size_t dim) : entries_(dim, 0) {}
  IntVector(std::initializer_list<Int> values) : entries_(values) {}
  explicit IntVector(std::vector<Int> values) : entries_(std::move(values)) {}

  static IntVector unit(std::size_t dim, std::size_t i, Int scale = 1) {
    IntVector v(dim);
    v.entries_.at(i) = scale;
    return v;
  }

  static IntVector constant(std::size_t dim, Int value) {
    return IntVector(std::vector<Int>(dim, value));
  }

  std::size_t dim() const noexcept { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_[i]; }
  Int &operator[](std::size_t i) { return entries_[i]; }
  std::span<const Int> entries() const noexcept { return entries_; }
  const std::vector<Int> &values() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Int x) { return x == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Int x) { return x >= 0; });
  }
  bool is_positive() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](Int x) { return x > 0; });
  }

  /// Indices of the nonzero coordinates.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] != 0)
        s.push_back(i);
    return s;
  }

  /// Coordinate sum; the grading used throughout.
  Int degree() const {
    Int s = 0;
    for (Int x : entries_)
      s = checked::add(s, x);
    return s;
  }

  /// Coordinatewise <=.
  bool dominated_by(const IntVector &other) const {
    require_same_dim(other);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] > other.entries_[i])
        return false;
    return true;
  }

  IntVector &operator+=(const IntVector &o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] = checked::add(entries_[i], o.entries_[i]);
    return *this;
  }
  IntVector &operator-=(const IntVector &o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < entries_.size(); ++i)
      entries_[i] = checked::sub(entries_[i], o.entries_[i]);
    return *this;
  }
  IntVector &operator*=(Int k) {
    for (Int &x : entries_)
      x = checked::mul(x, k);
    return *this;
  }

  friend IntVector operator+(IntVector a, const IntVector &b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector &b) { return a -= b; }
  friend IntVector operator-(IntVector a) { return a *= -1; }
  friend IntVector operator*(Int k, IntVector a) { return a *= k; }
  friend IntVector operator*(IntVector a, Int k) { return a *= k; }

  friend bool operator==(const IntVector &, const IntVector &) = default;
  friend auto operator<=>(const IntVector &a, const IntVector &b) {
    return a.entries_ <=> b.entries_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i)
      os << (i ? "," : "") << entries_[i];
    os << ')';
    return os.str();
  }

private:
  void require_same_dim(const IntVector &o) const {
    if (o.dim() != dim())
      throw InvalidInput("dimension mismatch: " + std::to_string(dim()) +
                         " vs " + std::to_string(o.dim()));
  }

  std::vector<Int> entries_;
};

struct IntVectorHash {
  std::size_t operator()(const IntVector &v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : v.entries())
      h = (h ^ std::hash<Int>{}(x)) * 0x100000001b3ULL;
    return h;
  }
};

/// supp(a) is a subset of supp(b).
inline bool support_within(const IntVector &a, const IntVector &b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] != 0 && b[i] == 0)
      return false;
  return true;
}

/// Divides out the content; zero stays zero.
inline IntVector primitive(const IntVector &v) {
  Int g = 0;
  for (Int x : v.entries())
    g = gcd(g, x);
  if (g <= 1)
    return v;
  std::vector<Int> out(v.values());
  for (Int &x : out)
    x /= g;
  return IntVector(std::move(out));
}

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>> &rows) {
    if (rows.empty())
      return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Column j of the result is vectors[j].
  static IntMatrix from_columns(std::span<const IntVector> vectors) {
    if (vectors.empty())
      return {};
    IntMatrix m(vectors.front().dim(), vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (vectors[j].dim() != m.rows_)
        throw InvalidInput("column vectors of unequal length");
      for (std::size_t i = 0; i < m.rows_; ++i)
        m(i, j) = vectors[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Int operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Int &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  std::vector<std::vector<Int>> to_rows() const {
    std::vector<std::vector<Int>> out(rows_, std::vector<Int>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out[i][j] = (*this)(i, j);
    return out;
  }

  IntVector apply(const IntVector &v) const {
    if (v.dim() != cols_)
      throw InvalidInput("matrix-vector dimension mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        s = checked::add(s, checked::mul((*this)(i, j), v[j]));
      out[i] = s;
    }
    return out;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
      throw InvalidInput("matrix product dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < a.cols_; ++k)
          s = checked::add(s, checked::mul(a(i, k), b(k, j)));
        out(i, j) = s;
      }
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  /// gcd of all entries.
  Int content() const {
    Int g = 0;
    for (Int x : data_)
      g = gcd(g, x);
    return g;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) =
          checked::add((*this)(dst, j), checked::mul(k, (*this)(src, j)));
  }
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int k) {
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) =
          checked::add((*this)(i, dst), checked::mul(k, (*this)(i, src)));
  }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Fraction-free (Bareiss) determinant.
inline Int determinant(const IntMatrix &m) {
  if (!m.is_square())
    throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = checked::sub(checked::mul(a(i, j), a(k, k)),
                               checked::mul(a(i, k), a(k, j))) /
                  prev;
    prev = a(k, k);
  }
  return checked::mul(sign, a(n - 1, n - 1));
}

/// Classical adjoint: adjugate(M) * M = det(M) * I. The 1x1 adjugate is [1].
inline IntMatrix adjugate(const IntMatrix &m) {
  if (!m.is_square())
    throw InvalidInput("adjugate of a non-square matrix (" +
                       std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ")");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor C(i, j) lands at adj(j, i)
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i)
          continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j)
            continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      Int cof = determinant(minor);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : checked::neg(cof);
    }
  return adj;
}

/// left * input * right = diagonal with divisors d_1 | d_2 | ... on the
/// leading diagonal; both transforms are unimodular.
struct SmithForm {
  std::vector<Int> divisors; // nonzero diagonal entries, all positive
  std::size_t rank = 0;
  IntMatrix left;
  IntMatrix right;
  IntMatrix diagonal;
};

inline SmithForm smith_normal_form(const IntMatrix &input) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    for (;;) {
      std::size_t pi = rows, pj = cols;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (best == 0 || checked::abs(a(i, j)) < best)) {
            best = checked::abs(a(i, j));
            pi = i;
            pj = j;
          }
      if (best == 0)
        goto done;
      if (pi != t) {
        a.swap_rows(pi, t);
        u.swap_rows(pi, t);
      }
      if (pj != t) {
        a.swap_cols(pj, t);
        v.swap_cols(pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = floor_div(a(i, t), a(t, t));
        if (q != 0) {
          a.add_row_multiple(i, t, -q);
          u.add_row_multiple(i, t, -q);
        }
        if (a(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Int q = floor_div(a(t, j), a(t, t));
        if (q != 0) {
          a.add_col_multiple(j, t, -q);
          v.add_col_multiple(j, t, -q);
        }
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;
      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      a.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j)
        a(t, j) = checked::neg(a(t, j));
      for (std::size_t j = 0; j < rows; ++j)
        u(t, j) = checked::neg(u(t, j));
    }
  }
done:
  SmithForm sf;
  sf.rank = t;
  for (std::size_t i = 0; i < t; ++i)
    sf.divisors.push_back(a(i, i));
  sf.left = std::move(u);
  sf.right = std::move(v);
  sf.diagonal = std::move(a);
  return sf;
}

using CosetLabel = std::vector<Int>;

/// G / L for full-rank lattices L <= G <= Z^d, each given by generators.
///
/// Membership in G and coset labels both come from Smith forms: with
/// U * [gens of G] * V = diag(g_i), x lies in G iff g_i | (U x)_i, and
/// z = diag(g)^{-1} U x are its coordinates in a basis of G. Writing the
/// generators of L in those coordinates as T with U' T V' = diag(l_i), the
/// label of x is ((U' z)_i mod l_i)_i.
class QuotientGroup {
public:
  QuotientGroup(std::span<const IntVector> ambient,
                std::span<const IntVector> sub) {
    if (ambient.empty() || sub.empty())
      throw InvalidInput("lattice needs at least one generator");
    dim_ = ambient.front().dim();
    SmithForm ga = smith_normal_form(IntMatrix::from_columns(ambient));
    if (ga.rank != dim_)
      throw InvalidInput("rank deficiency: ambient generators span rank " +
                         std::to_string(ga.rank) + " < " +
                         std::to_string(dim_));
    ambient_left_ = std::move(ga.left);
    ambient_divisors_ = std::move(ga.divisors);

    std::vector<IntVector> coords;
    coords.reserve(sub.size());
    for (const IntVector &s : sub) {
      auto z = ambient_coordinates(s);
      if (!z)
        throw InvalidInput("sublattice generator " + s.to_string() +
                           " does not lie in the ambient lattice");
      coords.push_back(std::move(*z));
    }
    SmithForm gs = smith_normal_form(IntMatrix::from_columns(coords));
    if (gs.rank != dim_)
      throw InvalidInput("rank deficiency: sublattice generators span rank " +
                         std::to_string(gs.rank) + " < " +
                         std::to_string(dim_));
    sub_left_ = std::move(gs.left);
    sub_divisors_ = std::move(gs.divisors);
    index_ = 1;
    for (Int d : sub_divisors_)
      index_ = checked::mul(index_, d);
  }

  std::size_t dim() const noexcept { return dim_; }
  Int index() const noexcept { return index_; }
  /// Elementary divisors of the sublattice inside the ambient lattice.
  const std::vector<Int> &elementary_divisors() const noexcept {
    return sub_divisors_;
  }

  bool contains(const IntVector &x) const {
    return ambient_coordinates(x).has_value();
  }

  CosetLabel label(const IntVector &x) const {
    auto z = ambient_coordinates(x);
    if (!z)
      throw InvalidInput("vector " + x.to_string() +
                         " is not in the ambient lattice");
    IntVector y = sub_left_.apply(*z);
    CosetLabel out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      out[i] = floor_mod(y[i], sub_divisors_[i]);
    return out;
  }

private:
  std::optional<IntVector> ambient_coordinates(const IntVector &x) const {
    if (x.dim() != dim_)
      throw InvalidInput("dimension mismatch in lattice coordinates");
    IntVector y = ambient_left_.apply(x);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (y[i] % ambient_divisors_[i] != 0)
        return std::nullopt;
      y[i] /= ambient_divisors_[i];
    }
    return y;
  }

  std::size_t dim_ = 0;
  IntMatrix ambient_left_;
  std::vector<Int> ambient_divisors_;
  IntMatrix sub_left_;
  std::vector<Int> sub_divisors_;
  Int index_ = 1;
};

/// |lattice(super) / lattice(sub)|.
inline Int lattice_index(std::span<const IntVector> super_generators,
                         std::span<const IntVector> sub_generators) {
  return QuotientGroup(super_generators, sub_generators).index();
}

inline CosetLabel coset_label(const QuotientGroup &q, const IntVector &v) {
  return q.label(v);
}

} // namespace sgring
