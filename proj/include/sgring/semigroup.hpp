#pragma once

// Presentations of affine semigroups H in N^d, the membership oracle, extreme
// rays of the rational cone, and the orthogonal normal form.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgring/lattice.hpp"

namespace sgring {

struct Limits {
  Int max_box_volume = 100'000'000;
  std::size_t max_apery = 100'000;
  std::size_t max_elements = 5'000'000;
  std::size_t max_fm_dim = 4;
  std::size_t max_fm_rows = 200'000;
};

/// Generators of H, deduplicated in order of first appearance. Every
/// generator is a nonzero vector of N^d.
class Presentation {
public:
  Presentation(std::size_t dim, std::vector<IntVector> generators) : dim_(dim) {
    if (dim == 0)
      throw InvalidInput("dimension must be positive");
    if (generators.empty())
      throw InvalidInput("empty generator list");
    std::unordered_set<IntVector, IntVectorHash> seen;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      IntVector &g = generators[j];
      if (g.dim() != dim)
        throw InvalidInput("generator #" + std::to_string(j) + " " +
                           g.to_string() + " has length " +
                           std::to_string(g.dim()) + ", expected " +
                           std::to_string(dim));
      if (!g.is_nonnegative())
        throw InvalidInput("generator #" + std::to_string(j) + " " +
                           g.to_string() + " has a negative entry");
      if (g.is_zero())
        throw InvalidInput("generator #" + std::to_string(j) + " is zero");
      if (seen.insert(g).second)
        generators_.push_back(std::move(g));
    }
  }

  /// Columns of `m` are the generators.
  static Presentation from_matrix(const std::vector<std::vector<Int>> &rows) {
    if (rows.empty())
      throw InvalidInput("empty matrix");
    IntMatrix m = IntMatrix::from_rows(rows);
    std::vector<IntVector> gens;
    for (std::size_t j = 0; j < m.cols(); ++j)
      gens.push_back(m.column(j));
    return Presentation(m.rows(), std::move(gens));
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVector> &generators() const noexcept {
    return generators_;
  }

  std::size_t rank() const {
    return smith_normal_form(IntMatrix::from_columns(generators_)).rank;
  }

  friend bool operator==(const Presentation &, const Presentation &) = default;

private:
  std::size_t dim_ = 0;
  std::vector<IntVector> generators_;
};

inline Int degree(const IntVector &v) { return v.degree(); }

/// Decides v in H by a memoized search over the box [0, v]: every partial
/// sum of a representation of v stays coordinatewise below v because H lies
/// in N^d. Queries are serialized by an internal mutex.
class MembershipOracle {
public:
  explicit MembershipOracle(Presentation presentation,
                            Int max_box_volume = Limits{}.max_box_volume)
      : presentation_(std::move(presentation)),
        max_box_volume_(max_box_volume) {}

  const Presentation &presentation() const noexcept { return presentation_; }
  Int max_box_volume() const noexcept { return max_box_volume_; }

  bool contains(const IntVector &v) const {
    if (v.dim() != presentation_.dim())
      throw InvalidInput("membership query of dimension " +
                         std::to_string(v.dim()) + " in a semigroup of " +
                         "dimension " + std::to_string(presentation_.dim()));
    if (!v.is_nonnegative())
      return false;
    if (v.is_zero())
      return true;
    check_box(v);
    std::lock_guard lock(mutex_);
    return search(v);
  }

  std::size_t memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

private:
  void check_box(const IntVector &v) const {
    Int volume = 1;
    for (Int x : v.entries()) {
      Int side = x + 1;
      if (volume > max_box_volume_ / side)
        throw ResourceLimit("membership box for " + v.to_string() +
                            " exceeds max_box_volume = " +
                            std::to_string(max_box_volume_));
      volume *= side;
    }
  }

  bool search(const IntVector &target) const {
    if (auto it = memo_.find(target); it != memo_.end())
      return it->second;
    const auto &gens = presentation_.generators();
    struct Frame {
      IntVector v;
      std::size_t next;
    };
    std::vector<Frame> stack;
    stack.push_back({target, 0});
    std::optional<bool> child; // verdict of the frame just popped
    while (!stack.empty()) {
      if (child) {
        if (*child) {
          memo_.emplace(stack.back().v, true);
          stack.pop_back();
          continue;
        }
        child.reset();
      }
      const std::size_t top = stack.size() - 1;
      bool pushed = false;
      bool found = false;
      while (stack[top].next < gens.size()) {
        const IntVector &g = gens[stack[top].next++];
        if (!g.dominated_by(stack[top].v))
          continue;
        IntVector rest = stack[top].v - g;
        if (rest.is_zero()) {
          found = true;
          break;
        }
        if (auto it = memo_.find(rest); it != memo_.end()) {
          if (it->second) {
            found = true;
            break;
          }
          continue;
        }
        stack.push_back({std::move(rest), 0});
        pushed = true;
        break;
      }
      if (pushed)
        continue;
      memo_.emplace(stack[top].v, found);
      stack.pop_back();
      child = found;
    }
    return memo_.at(target);
  }

  Presentation presentation_;
  Int max_box_volume_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<IntVector, bool, IntVectorHash> memo_;
};

namespace detail {

/// coeffs . y >= rhs over the rationals.
struct Inequality {
  std::vector<Int> coeffs;
  Int rhs;
};

inline void normalize(Inequality &row) {
  Int g = checked::abs(row.rhs);
  for (Int c : row.coeffs)
    g = gcd(g, c);
  if (g > 1) {
    for (Int &c : row.coeffs)
      c /= g;
    row.rhs /= g;
  }
}

/// Fourier-Motzkin feasibility test. Rows with identical coefficient vectors
/// collapse to the tightest right-hand side after every elimination.
inline bool fm_feasible(std::vector<Inequality> rows, std::size_t nvars,
                        std::size_t max_rows) {
  auto compact = [&](std::vector<Inequality> &in) -> bool {
    std::map<std::vector<Int>, Int> best;
    for (Inequality &r : in) {
      normalize(r);
      bool trivial = std::all_of(r.coeffs.begin(), r.coeffs.end(),
                                 [](Int c) { return c == 0; });
      if (trivial) {
        if (r.rhs > 0)
          return false; // 0 >= positive
        continue;
      }
      auto [it, fresh] = best.emplace(r.coeffs, r.rhs);
      if (!fresh)
        it->second = std::max(it->second, r.rhs);
    }
    in.clear();
    for (auto &[c, rhs] : best)
      in.push_back({c, rhs});
    return true;
  };
  if (!compact(rows))
    return false;
  for (std::size_t k = 0; k < nvars; ++k) {
    std::vector<Inequality> pos, neg, next;
    for (Inequality &r : rows) {
      if (r.coeffs[k] > 0)
        pos.push_back(std::move(r));
      else if (r.coeffs[k] < 0)
        neg.push_back(std::move(r));
      else
        next.push_back(std::move(r));
    }
    if (pos.size() * neg.size() + next.size() > max_rows)
      throw ResourceLimit("Fourier-Motzkin elimination exceeds max_fm_rows = " +
                          std::to_string(max_rows));
    for (const Inequality &p : pos)
      for (const Inequality &q : neg) {
        Int wp = checked::neg(q.coeffs[k]);
        Int wq = p.coeffs[k];
        Inequality r;
        r.coeffs.resize(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
          r.coeffs[i] = checked::add(checked::mul(wp, p.coeffs[i]),
                                     checked::mul(wq, q.coeffs[i]));
        r.coeffs[k] = 0;
        r.rhs = checked::add(checked::mul(wp, p.rhs), checked::mul(wq, q.rhs));
        next.push_back(std::move(r));
      }
    rows = std::move(next);
    if (!compact(rows))
      return false;
  }
  return true;
}

/// True iff `dir` spans an extreme ray of cone(others + dir), i.e. dir is not
/// a nonnegative rational combination of `others`. By Farkas' lemma that
/// holds exactly when some functional y has y.dir = 0 and y.g >= 1 for every
/// g in others (the cone is pointed since it sits in the orthant).
inline bool is_extreme_direction(const IntVector &dir,
                                 const std::vector<IntVector> &others,
                                 std::size_t max_rows) {
  if (others.empty())
    return true;
  const std::size_t d = dir.dim();
  std::size_t pivot = d;
  for (std::size_t i = 0; i < d; ++i)
    if (dir[i] > 0) {
      pivot = i;
      break;
    }
  if (pivot == d)
    throw InvalidInput("zero direction");
  // Substitute y_pivot = -(sum_{i != pivot} dir_i y_i) / dir_pivot and scale
  // by dir_pivot > 0.
  std::vector<Inequality> rows;
  rows.reserve(others.size());
  for (const IntVector &g : others) {
    Inequality r;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == pivot)
        continue;
      r.coeffs.push_back(checked::sub(checked::mul(g[i], dir[pivot]),
                                      checked::mul(g[pivot], dir[i])));
    }
    r.rhs = dir[pivot];
    rows.push_back(std::move(r));
  }
  return fm_feasible(std::move(rows), d - 1, max_rows);
}

} // namespace detail

/// Primitive directions of the extreme rays of cone(generators), in order of
/// first appearance among the generators.
inline std::vector<IntVector> extreme_rays(const Presentation &p,
                                           const Limits &limits = {}) {
  if (p.rank() != p.dim())
    throw InvalidInput("rank-deficient generator set: rank " +
                       std::to_string(p.rank()) + " < dimension " +
                       std::to_string(p.dim()));
  if (p.dim() > limits.max_fm_dim)
    throw ResourceLimit("extreme-ray test limited to dimension max_fm_dim = " +
                        std::to_string(limits.max_fm_dim));
  std::vector<IntVector> directions;
  for (const IntVector &g : p.generators()) {
    IntVector dir = primitive(g);
    if (std::find(directions.begin(), directions.end(), dir) ==
        directions.end())
      directions.push_back(std::move(dir));
  }
  std::vector<IntVector> rays;
  for (const IntVector &dir : directions) {
    std::vector<IntVector> others;
    for (const IntVector &o : directions)
      if (o != dir)
        others.push_back(o);
    if (detail::is_extreme_direction(dir, others, limits.max_fm_rows))
      rays.push_back(dir);
  }
  return rays;
}

/// v in cone(rays) for d linearly independent rays, via Cramer's rule.
inline bool in_simplicial_cone(const std::vector<IntVector> &rays,
                               const IntVector &v) {
  IntMatrix r = IntMatrix::from_columns(rays);
  Int det = determinant(r);
  if (det == 0)
    return false;
  IntVector lambda = adjugate(r).apply(v);
  for (Int x : lambda.entries())
    if ((det > 0 && x < 0) || (det < 0 && x > 0))
      return false;
  return true;
}

inline bool is_simplicial(const Presentation &p, const Limits &limits = {}) {
  if (p.rank() != p.dim())
    return false;
  std::vector<IntVector> rays = extreme_rays(p, limits);
  if (rays.size() != p.dim())
    return false;
  return std::all_of(p.generators().begin(), p.generators().end(),
                     [&](const IntVector &g) {
                       return in_simplicial_cone(rays, g);
                     });
}

/// Smallest k >= 1 with k * direction in H. The scan stops at the smallest
/// generator lying on the ray.
inline IntVector minimal_ray_element(const MembershipOracle &oracle,
                                     const IntVector &direction) {
  IntVector dir = primitive(direction);
  if (dir.is_zero() || !dir.is_nonnegative())
    throw InvalidInput("direction " + direction.to_string() +
                       " is not a nonzero nonnegative vector");
  std::optional<Int> bound;
  for (const IntVector &g : oracle.presentation().generators()) {
    if (primitive(g) != dir)
      continue;
    std::size_t i = dir.support().front();
    Int k = g[i] / dir[i];
    if (!bound || k < *bound)
      bound = k;
  }
  if (!bound)
    throw InvalidInput("no generator lies on the ray through " +
                       dir.to_string());
  for (Int k = 1; k <= *bound; ++k) {
    IntVector candidate = k * dir;
    if (oracle.contains(candidate))
      return candidate;
  }
  throw InternalError("generator multiple of " + dir.to_string() +
                      " not found by the membership oracle");
}

/// An orthogonal semigroup of order m isomorphic to a simplicial source H:
/// base generators are transform * (source generators), the minimal ray
/// elements b_i map to m * e_i, and m' e_i is outside H for 0 < m' < m.
class OrthogonalPresentation {
public:
  OrthogonalPresentation(std::shared_ptr<const MembershipOracle> source_oracle,
                         std::vector<IntVector> source_extreme,
                         IntMatrix transform, Int order)
      : source_oracle_(std::move(source_oracle)),
        source_extreme_(std::move(source_extreme)),
        transform_(std::move(transform)), order_(order),
        ray_matrix_(IntMatrix::from_columns(source_extreme_)),
        base_(build_base()) {}

  std::size_t dim() const noexcept { return base_.dim(); }
  const Presentation &base() const noexcept { return base_; }
  const Presentation &source() const noexcept {
    return source_oracle_->presentation();
  }
  Int order() const noexcept { return order_; }
  /// iota: source coordinates -> orthogonal coordinates.
  const IntMatrix &transform() const noexcept { return transform_; }
  /// Columns b_i; satisfies ray_matrix * transform = order * I.
  const IntMatrix &ray_matrix() const noexcept { return ray_matrix_; }
  const std::vector<IntVector> &source_extreme() const noexcept {
    return source_extreme_;
  }
  const MembershipOracle &source_oracle() const noexcept {
    return *source_oracle_;
  }

  /// {m e_1, ..., m e_d}
  std::vector<IntVector> extreme_set() const {
    std::vector<IntVector> e;
    for (std::size_t i = 0; i < dim(); ++i)
      e.push_back(IntVector::unit(dim(), i, order_));
    return e;
  }

  IntVector to_orthogonal(const IntVector &source_vector) const {
    return transform_.apply(source_vector);
  }

  /// Preimage under iota, when it is integral.
  std::optional<IntVector> to_source(const IntVector &x) const {
    IntVector y = ray_matrix_.apply(x);
    for (std::size_t i = 0; i < y.dim(); ++i) {
      if (y[i] % order_ != 0)
        return std::nullopt;
      y[i] /= order_;
    }
    return y;
  }

  IntVector to_source_checked(const IntVector &x) const {
    auto y = to_source(x);
    if (!y)
      throw InvalidInput(x.to_string() +
                         " is not in the image of the orthogonal transform");
    return *y;
  }

  /// x in H' = iota(H), answered by the source oracle.
  bool contains(const IntVector &x) const {
    if (!x.is_nonnegative())
      return false;
    auto y = to_source(x);
    return y && source_oracle_->contains(*y);
  }

private:
  Presentation build_base() const {
    std::vector<IntVector> gens;
    for (const IntVector &g : source().generators()) {
      IntVector t = transform_.apply(g);
      if (!t.is_nonnegative())
        throw InternalError("orthogonal image " + t.to_string() + " of " +
                            g.to_string() + " leaves the orthant");
      gens.push_back(std::move(t));
    }
    return Presentation(source().dim(), std::move(gens));
  }

  std::shared_ptr<const MembershipOracle> source_oracle_;
  std::vector<IntVector> source_extreme_;
  IntMatrix transform_;
  Int order_;
  IntMatrix ray_matrix_;
  Presentation base_;
};

/// Orthogonal normal form via the adjugate of the matrix B of minimal ray
/// elements (columns ordered by first appearance, last two swapped when
/// det B < 0). The adjugate is divided by its content g, so the order is
/// det(B) / g; already-orthogonal input comes back unchanged.
///
/// `extreme_hint` optionally lists generator indices fixing the ray order.
inline OrthogonalPresentation
orthogonalize(const Presentation &p, const Limits &limits = {},
              const std::vector<std::size_t> &extreme_hint = {}) {
  if (p.rank() != p.dim())
    throw NotSimplicial("generators span rank " + std::to_string(p.rank()) +
                        " < dimension " + std::to_string(p.dim()));
  std::vector<IntVector> rays = extreme_rays(p, limits);
  if (rays.size() != p.dim())
    throw NotSimplicial("cone has " + std::to_string(rays.size()) +
                        " extreme rays in dimension " +
                        std::to_string(p.dim()));
  for (const IntVector &g : p.generators())
    if (!in_simplicial_cone(rays, g))
      throw NotSimplicial("generator " + g.to_string() +
                          " lies outside the cone of the extreme rays");

  if (!extreme_hint.empty()) {
    if (extreme_hint.size() != rays.size())
      throw InvalidInput("extreme_hint must name exactly " +
                         std::to_string(rays.size()) + " generators");
    std::vector<IntVector> ordered;
    for (std::size_t idx : extreme_hint) {
      if (idx >= p.generators().size())
        throw InvalidInput("extreme_hint index " + std::to_string(idx) +
                           " out of range");
      IntVector dir = primitive(p.generators()[idx]);
      if (std::find(rays.begin(), rays.end(), dir) == rays.end())
        throw InvalidInput("extreme_hint generator " +
                           p.generators()[idx].to_string() +
                           " is not on an extreme ray");
      if (std::find(ordered.begin(), ordered.end(), dir) != ordered.end())
        throw InvalidInput("extreme_hint repeats a ray");
      ordered.push_back(dir);
    }
    rays = std::move(ordered);
  }

  auto oracle = std::make_shared<const MembershipOracle>(p, limits.max_box_volume);
  std::vector<IntVector> b;
  for (const IntVector &r : rays)
    b.push_back(minimal_ray_element(*oracle, r));
  IntMatrix bm = IntMatrix::from_columns(b);
  Int det = determinant(bm);
  if (det == 0)
    throw NotSimplicial("degenerate extreme rays (det = 0)");
  if (det < 0) {
    std::swap(b[b.size() - 2], b[b.size() - 1]);
    bm = IntMatrix::from_columns(b);
    det = determinant(bm);
  }
  IntMatrix adj = adjugate(bm);
  Int g = adj.content();
  IntMatrix iota(adj.rows(), adj.cols());
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j)
      iota(i, j) = adj(i, j) / g;
  Int order = det / g;
  if (det % g != 0)
    throw InternalError("content of adj(B) does not divide det(B)");

  OrthogonalPresentation op(oracle, b, std::move(iota), order);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (op.to_orthogonal(b[i]) != IntVector::unit(p.dim(), i, order))
      throw InternalError("transform does not send " + b[i].to_string() +
                          " to m e_i");
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (Int k = 1; k < order; ++k)
      if (op.contains(IntVector::unit(p.dim(), i, k)))
        throw InternalError("orthogonal minimality fails: " +
                            std::to_string(k) + " e_" + std::to_string(i + 1) +
                            " lies in H'");
  return op;
}

/// Elements of H of degree <= max_degree, sorted, by breadth-first closure
/// under generator addition.
inline std::vector<IntVector>
enumerate_up_to_degree(const Presentation &p, Int max_degree,
                       std::size_t max_elements = Limits{}.max_elements) {
  if (max_degree < 0)
    throw InvalidInput("negative degree bound");
  std::unordered_set<IntVector, IntVectorHash> seen;
  std::vector<IntVector> frontier{IntVector(p.dim())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const IntVector &u : frontier)
      for (const IntVector &g : p.generators()) {
        IntVector s = u + g;
        if (s.degree() > max_degree)
          continue;
        if (seen.insert(s).second) {
          if (seen.size() > max_elements)
            throw ResourceLimit("enumeration exceeds max_elements = " +
                                std::to_string(max_elements));
          next.push_back(std::move(s));
        }
      }
    frontier = std::move(next);
  }
  std::vector<IntVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<IntVector>
enumerate_up_to_degree(const MembershipOracle &oracle, Int max_degree,
                       std::size_t max_elements = Limits{}.max_elements) {
  return enumerate_up_to_degree(oracle.presentation(), max_degree,
                                max_elements);
}

} // namespace sgring
