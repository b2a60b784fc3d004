#pragma once

// Two-dimensional cyclic-quotient semigroups
//   H = {(u1, u2) in N^2 : u1 + m1 u2 = 0 mod n},
// their Hirzebruch-Jung expansions, and the AG classification by
// m1 = m2 = 1 mod c, checked against the general pipeline.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgring/canonical.hpp"

namespace sgring {

struct CyclicQuotientSpec {
  Int n = 0;
  Int m1 = 0;
  Int m2 = 0; // inverse of m1 mod n
  Int c = 0;  // (m1 m2 - 1) / n
  std::optional<std::pair<Int, Int>> pq; // m1 = pc + 1, m2 = qc + 1

  friend bool operator==(const CyclicQuotientSpec &,
                         const CyclicQuotientSpec &) = default;
};

struct HJExpansion {
  std::vector<Int> coefficients;

  /// a_1 - 1/(a_2 - 1/(...)) as a reduced fraction (numerator, denominator).
  std::pair<Int, Int> evaluate() const {
    if (coefficients.empty())
      throw InvalidInput("empty continued fraction");
    Int num = coefficients.back();
    Int den = 1;
    for (auto it = coefficients.rbegin() + 1; it != coefficients.rend(); ++it) {
      // a - den/num = (a num - den) / num
      Int next = checked::sub(checked::mul(*it, num), den);
      den = num;
      num = next;
    }
    Int g = gcd(num, den);
    return {num / g, den / g};
  }

  friend bool operator==(const HJExpansion &, const HJExpansion &) = default;
};

inline void require_cyclic_pair(Int n, Int m1) {
  if (n < 2 || m1 <= 0 || m1 >= n)
    throw InvalidInput("need 0 < m1 < n, got n = " + std::to_string(n) +
                       ", m1 = " + std::to_string(m1));
  if (gcd(n, m1) != 1)
    throw InvalidInput("n = " + std::to_string(n) + " and m1 = " +
                       std::to_string(m1) + " are not coprime");
}

/// Irreducible elements of {u in N^2 : u1 + m1 u2 = 0 mod n}, ordered
/// (n,0), (0,n), then by second coordinate. Any element with a coordinate
/// above n splits off (n,0) or (0,n), so the box [0,n]^2 suffices.
inline Presentation cyclic_presentation(Int n, Int m1) {
  require_cyclic_pair(n, m1);
  std::vector<IntVector> members;
  for (Int u2 = 0; u2 <= n; ++u2)
    for (Int u1 = 0; u1 <= n; ++u1)
      if ((u1 != 0 || u2 != 0) && floor_mod(u1 + m1 * u2, n) == 0)
        members.push_back(IntVector{u1, u2});
  std::unordered_set<IntVector, IntVectorHash> member_set(members.begin(),
                                                          members.end());
  std::vector<IntVector> irreducible;
  for (const IntVector &u : members) {
    bool splits = false;
    for (const IntVector &a : members) {
      if (a == u || !a.dominated_by(u))
        continue;
      if (member_set.contains(u - a)) {
        splits = true;
        break;
      }
    }
    if (!splits)
      irreducible.push_back(u);
  }
  std::vector<IntVector> gens{IntVector{n, 0}, IntVector{0, n}};
  for (const IntVector &u : irreducible)
    if (u != gens[0] && u != gens[1])
      gens.push_back(u);
  return Presentation(2, std::move(gens));
}

inline std::pair<Int, Int> inverse_and_c(Int n, Int m1) {
  require_cyclic_pair(n, m1);
  auto [g, x, y] = extended_gcd(m1, n);
  (void)y;
  Int m2 = floor_mod(x, n);
  if (n == 1 || m2 == 0)
    m2 = 1;
  return {m2, (checked::mul(m1, m2) - 1) / n};
}

inline HJExpansion hj_expansion(Int n, Int m) {
  require_cyclic_pair(n, m);
  HJExpansion out;
  while (m != 0) {
    Int a = ceil_div(n, m);
    out.coefficients.push_back(a);
    Int r = checked::sub(checked::mul(a, m), n);
    n = m;
    m = r;
  }
  return out;
}

/// Criterion form: AG iff m1 = 1 or m1 = m2 = 1 mod c.
inline std::pair<bool, std::optional<std::pair<Int, Int>>>
is_ag_cyclic(Int n, Int m1) {
  auto [m2, c] = inverse_and_c(n, m1);
  if (c == 0) {
    if (m1 != 1)
      throw InternalError("c = 0 with m1 = " + std::to_string(m1));
    return {true, std::nullopt};
  }
  if ((m1 - 1) % c != 0 || (m2 - 1) % c != 0)
    return {false, std::nullopt};
  const Int p = (m1 - 1) / c;
  const Int q = (m2 - 1) / c;
  if (checked::add(checked::add(checked::mul(checked::mul(p, q), c), p), q) !=
      n)
    throw InternalError("n != pqc + p + q for n = " + std::to_string(n) +
                        ", m1 = " + std::to_string(m1));
  return {true, std::make_pair(p, q)};
}

inline CyclicQuotientSpec cyclic_spec(Int n, Int m1) {
  auto [m2, c] = inverse_and_c(n, m1);
  return {n, m1, m2, c, is_ag_cyclic(n, m1).second};
}

/// Continued-fraction form: [[q+1, 2, ..., 2, p+1]]. A single coefficient
/// (m1 = 1) counts as AG. Returns (p, q) when read off a length >= 2 shape.
inline std::pair<bool, std::optional<std::pair<Int, Int>>>
hj_shape(const HJExpansion &e) {
  const auto &a = e.coefficients;
  if (a.size() < 2)
    return {true, std::nullopt};
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (a[i] != 2)
      return {false, std::nullopt};
  return {true, std::make_pair(a.back() - 1, a.front() - 1)};
}

/// Relative-interior elements of least degree, by direct enumeration.
inline std::vector<IntVector> min_degree_interior(Int n, Int m1) {
  require_cyclic_pair(n, m1);
  for (Int deg = 2;; ++deg) {
    std::vector<IntVector> found;
    for (Int u1 = 1; u1 < deg; ++u1) {
      Int u2 = deg - u1;
      if (floor_mod(u1 + m1 * u2, n) == 0)
        found.push_back(IntVector{u1, u2});
    }
    if (!found.empty())
      return found;
  }
}

inline IntVector ulrich_element_cyclic(Int n, Int m1) {
  auto [ag, pq] = is_ag_cyclic(n, m1);
  if (!ag)
    throw InvalidInput("n = " + std::to_string(n) + ", m1 = " +
                       std::to_string(m1) + " is not AG");
  if (m1 == 1)
    throw InvalidInput("m1 = 1 has no distinguished Ulrich element");
  IntVector v{pq->first, pq->second};
  std::vector<IntVector> least = min_degree_interior(n, m1);
  if (least.size() != 1 || least.front() != v)
    throw InternalError("(p,q) = " + v.to_string() +
                        " is not the unique least interior element");
  return v;
}

struct CyclicValidation {
  CyclicQuotientSpec spec;
  HJExpansion hj;
  bool criterion = false;
  bool shape = false;
  bool pipeline = false;
  bool cohen_macaulay = false;
  bool normal = false;
  std::size_t type = 0;
  std::vector<IntVector> pipeline_ulrich; // orthogonal = source coordinates
  std::vector<std::string> discrepancies;

  bool ok() const { return discrepancies.empty(); }
};

/// Runs the criterion, the continued-fraction shape, and the general AG
/// pipeline on the constructed semigroup and records every disagreement.
inline CyclicValidation cross_validate(Int n, Int m1,
                                       const Limits &limits = {}) {
  CyclicValidation r;
  r.spec = cyclic_spec(n, m1);
  r.hj = hj_expansion(n, m1);
  auto note = [&](std::string s) { r.discrepancies.push_back(std::move(s)); };

  if (r.hj.evaluate() != std::make_pair(n, m1))
    note("continued fraction does not evaluate to n/m1");
  r.criterion = is_ag_cyclic(n, m1).first;
  auto [shape, shape_pq] = hj_shape(r.hj);
  r.shape = shape;
  if (shape && r.criterion && shape_pq != r.spec.pq)
    note("(p,q) read off the continued fraction differs from the criterion");
  if (shape && shape_pq && static_cast<Int>(r.hj.coefficients.size()) - 1 !=
                               r.spec.c)
    note("continued fraction length is not c + 1");

  OrthogonalPresentation op = orthogonalize(cyclic_presentation(n, m1), limits);
  if (op.order() != n)
    note("orthogonal order " + std::to_string(op.order()) + " != n");
  AperyData a = apery_set(op, limits);
  r.cohen_macaulay = is_cohen_macaulay(a);
  r.normal = is_normal(op, a);
  r.type = a.type;
  if (!r.cohen_macaulay)
    note("constructed semigroup is not Cohen-Macaulay");
  if (!r.normal)
    note("constructed semigroup is not normal");
  if (r.cohen_macaulay) {
    AGReport ag = ag_check(op, a);
    r.pipeline = ag.is_ag;
    for (const AGWitness &w : ag.witnesses)
      r.pipeline_ulrich.push_back(w.v);
    std::sort(r.pipeline_ulrich.begin(), r.pipeline_ulrich.end());
  }

  if (r.criterion != r.shape)
    note("criterion and continued-fraction shape disagree");
  if (r.criterion != r.pipeline)
    note("criterion and general pipeline disagree");
  if (r.pipeline && m1 > 1 && r.spec.pq) {
    IntVector v{r.spec.pq->first, r.spec.pq->second};
    if (r.pipeline_ulrich != std::vector<IntVector>{v})
      note("pipeline Ulrich witnesses differ from (p,q) = " + v.to_string());
  }
  return r;
}

} // namespace sgring
