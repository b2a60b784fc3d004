#pragma once

// Canonical-module combinatorics of a Cohen-Macaulay orthogonal semigroup:
// socle-derived generators of omega_H, the c_{w,h} tables, quotient
// multiplicities, Hilbert series, and the AG criterion. None of the ring
// objects are built; everything is read off the Apery data.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgring/apery.hpp"
#include "sgring/series.hpp"

namespace sgring {

/// sum_{b in E} b = m * (1, ..., 1).
inline IntVector extreme_sum(const OrthogonalPresentation &op) {
  return IntVector::constant(op.dim(), op.order());
}

inline void require_socle_element(const AperyData &a, const IntVector &w) {
  if (!std::binary_search(a.soc.begin(), a.soc.end(), w))
    throw InvalidInput(w.to_string() + " is not a socle element");
}

/// The Apery element v with h + v in ZE (unique under CM).
inline IntVector h_vee(const OrthogonalPresentation &op, const AperyData &a,
                       const IntVector &h) {
  require_cohen_macaulay(a);
  if (!op.contains(h))
    throw InvalidInput(h.to_string() + " is not in H");
  return a.in_coset_of(-h);
}

struct CanonicalData {
  /// (w, v_w = -w + sum E) for every w in Soc, sorted by w.
  std::vector<std::pair<IntVector, IntVector>> socle_generators;
  /// The <=_H-minimal v_w, sorted.
  std::vector<IntVector> minimal_generators;
  /// max deg Soc - sum of deg b, in orthogonal coordinates.
  Int a_invariant = 0;
};

inline CanonicalData canonical_generators(const OrthogonalPresentation &op,
                                          const AperyData &a) {
  require_cohen_macaulay(a);
  CanonicalData out;
  const IntVector total = extreme_sum(op);
  for (const IntVector &w : a.soc)
    out.socle_generators.emplace_back(w, total - w);
  for (const auto &[w, v] : out.socle_generators) {
    bool minimal = true;
    for (const auto &[w2, v2] : out.socle_generators)
      if (v2 != v && op.contains(v - v2)) {
        minimal = false;
        break;
      }
    if (minimal)
      out.minimal_generators.push_back(v);
  }
  std::sort(out.minimal_generators.begin(), out.minimal_generators.end());
  Int top = a.soc.front().degree();
  for (const IntVector &w : a.soc)
    top = std::max(top, w.degree());
  out.a_invariant = checked::sub(top, total.degree());
  return out;
}

struct CEntry {
  IntVector h;
  IntVector h_prime; // Apery element with h + h' = w + u
  IntVector u;       // in NE
  Int c = 0;         // deg u / m
};

struct CTable {
  IntVector w;
  std::vector<CEntry> entries; // in Apery order
};

inline CTable c_table(const OrthogonalPresentation &op, const AperyData &a,
                      const IntVector &w) {
  require_cohen_macaulay(a);
  require_socle_element(a, w);
  CTable t{w, {}};
  for (const IntVector &h : a.ap) {
    const IntVector &hp = a.in_coset_of(w - h);
    IntVector u = h + hp - w;
    for (Int x : u.entries())
      if (x < 0 || x % op.order() != 0)
        throw InternalError("c-table entry u = " + u.to_string() +
                            " is not in NE for h = " + h.to_string());
    t.entries.push_back({h, hp, u, u.degree() / op.order()});
  }
  return t;
}

/// Sum of c_{w,h} over Apery elements h not below w.
inline Int quotient_multiplicity(const OrthogonalPresentation &op,
                                 const AperyData &a, const IntVector &w) {
  Int total = 0;
  for (const CEntry &e : c_table(op, a, w).entries)
    if (!precedes(op, e.h, w))
      total = checked::add(total, e.c);
  return total;
}

struct Certificate {
  IntVector h;
  IntVector h_prime;
  IntVector b; // h + h_prime = w + b
};

struct AGWitness {
  IntVector w;
  IntVector v; // the Ulrich element -w + sum E
  std::vector<Certificate> certificates;
};

struct AGReport {
  bool is_ag = false;
  std::vector<AGWitness> witnesses;
  std::vector<std::pair<IntVector, Int>> quotient_multiplicities; // per w
  std::size_t type = 0;
};

/// Tests every w in Soc for the two socle conditions: the Apery elements not
/// below w are exactly Soc \ {w}, and each h in Soc \ {w} pairs with some
/// h' in Soc as h + h' = w + b with b in E. Per w this must agree with the
/// quotient multiplicity being type - 1.
inline AGReport ag_check(const OrthogonalPresentation &op, const AperyData &a) {
  require_cohen_macaulay(a);
  AGReport r;
  r.type = a.type;
  const std::vector<IntVector> extreme = op.extreme_set();
  const IntVector total = extreme_sum(op);
  for (const IntVector &w : a.soc) {
    bool cond_cover = true;
    for (const IntVector &h : a.ap) {
      bool other_socle = h != w && std::binary_search(a.soc.begin(),
                                                      a.soc.end(), h);
      if (other_socle != !precedes(op, h, w)) {
        cond_cover = false;
        break;
      }
    }
    bool cond_pair = true;
    std::vector<Certificate> certs;
    for (const IntVector &h : a.soc) {
      if (h == w)
        continue;
      std::optional<Certificate> found;
      for (const IntVector &hp : a.soc) {
        IntVector b = h + hp - w;
        if (std::find(extreme.begin(), extreme.end(), b) != extreme.end()) {
          found = Certificate{h, hp, b};
          break;
        }
      }
      if (!found) {
        cond_pair = false;
        break;
      }
      certs.push_back(*found);
    }
    const bool satisfied = cond_cover && cond_pair;
    const Int qm = quotient_multiplicity(op, a, w);
    r.quotient_multiplicities.emplace_back(w, qm);
    if (satisfied != (qm == static_cast<Int>(a.type) - 1))
      throw InternalError("socle conditions and quotient multiplicity " +
                          std::to_string(qm) + " disagree at w = " +
                          w.to_string());
    if (satisfied)
      r.witnesses.push_back({w, total - w, std::move(certs)});
  }
  r.is_ag = !r.witnesses.empty();
  return r;
}

/// sum_{h in Ap} t^{deg h} over (1 - t^m)^d.
inline HilbertSeries hilbert_numerator(const OrthogonalPresentation &op,
                                       const AperyData &a) {
  require_cohen_macaulay(a);
  HilbertSeries s;
  for (const IntVector &h : a.ap)
    add_term(s.numerator, h.degree(), 1);
  s.denominator.assign(op.dim(), op.order());
  return s;
}

/// (-1)^d P_R(1/t) = sum_h t^{dm - deg h} over (1 - t^m)^d.
inline HilbertSeries canonical_series(const OrthogonalPresentation &op,
                                      const AperyData &a) {
  require_cohen_macaulay(a);
  const Int top = extreme_sum(op).degree();
  HilbertSeries s;
  for (const IntVector &h : a.ap)
    add_term(s.numerator, checked::sub(top, h.degree()), 1);
  s.denominator.assign(op.dim(), op.order());
  return s;
}

/// P_K(t) - t^s P_R(t) with s = deg(-w + sum E).
inline HilbertSeries quotient_series(const OrthogonalPresentation &op,
                                     const AperyData &a, const IntVector &w) {
  require_socle_element(a, w);
  HilbertSeries s = canonical_series(op, a);
  const Int shift = (extreme_sum(op) - w).degree();
  for (const IntVector &h : a.ap)
    add_term(s.numerator, checked::add(shift, h.degree()), -1);
  return s;
}

/// With PF sorted f_1 < ... < f_r: f_i + f_{r-i} = f_r for 0 < i < r.
inline bool nari_check(const AperyData &a) {
  std::vector<Int> pf = pseudo_frobenius(a);
  const std::size_t r = pf.size();
  for (std::size_t i = 1; i < r; ++i)
    if (checked::add(pf[i - 1], pf[r - i - 1]) != pf[r - 1])
      return false;
  return true;
}

/// The numerical semigroup generated by the positive i-th coordinates of the
/// generators, divided by their gcd and minimalized. `i` is zero-based.
inline Presentation project_coordinate(const OrthogonalPresentation &op,
                                       std::size_t i) {
  if (i >= op.dim())
    throw InvalidInput("coordinate " + std::to_string(i) + " out of range");
  std::vector<Int> values;
  for (const IntVector &g : op.base().generators())
    if (g[i] > 0)
      values.push_back(g[i]);
  if (values.empty())
    throw InvalidInput("all projections to coordinate " + std::to_string(i) +
                       " vanish");
  Int g = 0;
  for (Int x : values)
    g = gcd(g, x);
  for (Int &x : values)
    x /= g;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  // Drop generators that are sums of smaller ones.
  std::vector<IntVector> gens;
  for (Int x : values) {
    std::vector<bool> reach(static_cast<std::size_t>(x) + 1, false);
    reach[0] = true;
    for (Int y = 1; y <= x; ++y)
      for (const IntVector &s : gens)
        if (s[0] <= y && reach[static_cast<std::size_t>(y - s[0])]) {
          reach[static_cast<std::size_t>(y)] = true;
          break;
        }
    if (!reach[static_cast<std::size_t>(x)])
      gens.push_back(IntVector{x});
  }
  return Presentation(1, std::move(gens));
}

} // namespace sgring
