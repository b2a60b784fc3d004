#pragma once

// Apery set of an orthogonal semigroup with respect to E = {m e_i}, its socle
// and type, and the structural verdicts read off from them.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sgring/semigroup.hpp"

namespace sgring {

/// a <=_H b, i.e. b - a in H.
inline bool precedes(const OrthogonalPresentation &op, const IntVector &a,
                     const IntVector &b) {
  if (!a.dominated_by(b))
    return false;
  return op.contains(b - a);
}

struct AperyData {
  std::vector<IntVector> ap;  // sorted
  std::vector<IntVector> soc; // sorted
  std::size_t type = 0;
  Int order = 0;
  QuotientGroup cosets;       // G(H) / ZE
  std::map<CosetLabel, std::vector<IntVector>> by_coset;

  /// The Apery element in the coset of x, provided it is unique.
  const IntVector &in_coset_of(const IntVector &x) const {
    auto it = by_coset.find(cosets.label(x));
    if (it == by_coset.end())
      throw InternalError("coset of " + x.to_string() +
                          " holds no Apery element");
    if (it->second.size() != 1)
      throw NotCohenMacaulay("coset of " + x.to_string() + " holds " +
                                 std::to_string(it->second.size()) +
                                 " Apery elements",
                             it->first);
    return it->second.front();
  }
};

/// Maximal elements of ap under <=_H.
inline std::vector<IntVector> socle(const std::vector<IntVector> &ap,
                                    const OrthogonalPresentation &op) {
  std::vector<IntVector> soc;
  for (const IntVector &u : ap) {
    bool maximal = true;
    for (const IntVector &other : ap)
      if (other != u && precedes(op, u, other)) {
        maximal = false;
        break;
      }
    if (maximal)
      soc.push_back(u);
  }
  return soc;
}

inline std::vector<IntVector> socle(const AperyData &a,
                                    const OrthogonalPresentation &op) {
  return socle(a.ap, op);
}

/// Breadth-first closure from 0: u + a is admitted when u + a - m e_i is
/// outside H for every i. Every nonzero u in Ap(H, E) is u' + a with u' in
/// Ap(H, E) and a a generator (if u' = b + h with b in E then
/// u = b + (h + a) in E + H), so the closure reaches all of Ap(H, E).
inline AperyData apery_set(const OrthogonalPresentation &op,
                           const Limits &limits = {}) {
  const std::size_t d = op.dim();
  const std::vector<IntVector> extreme = op.extreme_set();
  auto in_apery = [&](const IntVector &h) {
    for (const IntVector &b : extreme)
      if (b.dominated_by(h) && op.contains(h - b))
        return false;
    return true;
  };

  std::unordered_set<IntVector, IntVectorHash> seen;
  std::vector<IntVector> frontier{IntVector(d)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const IntVector &u : frontier)
      for (const IntVector &g : op.base().generators()) {
        IntVector s = u + g;
        if (seen.contains(s) || !in_apery(s))
          continue;
        seen.insert(s);
        if (seen.size() > limits.max_apery)
          throw ResourceLimit("Apery set exceeds max_apery = " +
                              std::to_string(limits.max_apery));
        next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }

  std::vector<IntVector> ap(seen.begin(), seen.end());
  std::sort(ap.begin(), ap.end());
  QuotientGroup cosets(op.base().generators(), extreme);
  std::map<CosetLabel, std::vector<IntVector>> by_coset;
  for (const IntVector &u : ap)
    by_coset[cosets.label(u)].push_back(u);

  AperyData out{std::move(ap), {}, 0, op.order(), std::move(cosets),
                std::move(by_coset)};
  out.soc = socle(out.ap, op);
  out.type = out.soc.size();
  return out;
}

/// One Apery element per coset of G(H)/ZE.
inline bool is_cohen_macaulay(const AperyData &a) {
  if (static_cast<Int>(a.by_coset.size()) != a.cosets.index())
    throw InternalError("Apery set misses a coset of G(H)/ZE");
  return std::all_of(a.by_coset.begin(), a.by_coset.end(),
                     [](const auto &kv) { return kv.second.size() == 1; });
}

/// A coset holding two or more Apery elements, if any.
inline std::optional<CosetLabel> crowded_coset(const AperyData &a) {
  for (const auto &[label, members] : a.by_coset)
    if (members.size() > 1)
      return label;
  return std::nullopt;
}

inline void require_cohen_macaulay(const AperyData &a) {
  if (auto bad = crowded_coset(a)) {
    const auto &members = a.by_coset.at(*bad);
    throw NotCohenMacaulay("not Cohen-Macaulay: Apery elements " +
                               members[0].to_string() + " and " +
                               members[1].to_string() + " share a coset",
                           *bad);
  }
}

struct Verdict {
  bool holds = true;
  std::optional<IntVector> witness;
};

/// Normal iff every Apery element has all coordinates below m. The witness
/// is the first Apery element with a coordinate >= m.
inline Verdict normality(const OrthogonalPresentation &op, const AperyData &a) {
  for (const IntVector &u : a.ap)
    for (Int x : u.entries())
      if (x >= op.order())
        return {false, u};
  return {true, std::nullopt};
}

inline bool is_normal(const OrthogonalPresentation &op, const AperyData &a) {
  return normality(op, a).holds;
}

/// Slim iff no nonzero element off the interior has degree < m. The witness
/// is such an element of least degree.
inline Verdict slimness(const OrthogonalPresentation &op,
                        const Limits &limits = {}) {
  if (op.order() <= 1)
    return {true, std::nullopt};
  auto elements =
      enumerate_up_to_degree(op.base(), op.order() - 1, limits.max_elements);
  std::optional<IntVector> witness;
  for (const IntVector &h : elements) {
    if (h.is_zero() || h.is_positive())
      continue;
    if (!witness || h.degree() < witness->degree())
      witness = h;
  }
  if (witness)
    return {false, witness};
  return {true, std::nullopt};
}

inline bool is_slim(const OrthogonalPresentation &op,
                    const Limits &limits = {}) {
  return slimness(op, limits).holds;
}

/// Every nonzero h in H of degree < m has supp w inside supp h.
inline bool reduction_condition_for(const OrthogonalPresentation &op,
                                    const IntVector &w,
                                    const Limits &limits = {}) {
  if (w.is_zero() || !op.contains(w))
    throw InvalidInput(w.to_string() + " is not a nonzero element of H");
  if (op.order() <= 1)
    return true;
  for (const IntVector &h :
       enumerate_up_to_degree(op.base(), op.order() - 1, limits.max_elements))
    if (!h.is_zero() && !support_within(w, h))
      return false;
  return true;
}

/// {s - m : s in Soc}; rank one only.
inline std::vector<Int> pseudo_frobenius(const AperyData &a) {
  if (a.cosets.dim() != 1)
    throw InvalidInput("pseudo-Frobenius numbers need a rank-1 semigroup");
  std::vector<Int> pf;
  for (const IntVector &s : a.soc)
    pf.push_back(checked::sub(s[0], a.order));
  std::sort(pf.begin(), pf.end());
  return pf;
}

struct StructureReport {
  bool is_cohen_macaulay = false;
  bool is_normal = false;
  bool is_slim = false;
  std::size_t type = 0;
  Int index = 0;
  std::size_t apery_size = 0;
  std::optional<CosetLabel> cm_witness;     // crowded coset
  std::optional<IntVector> normal_witness;  // coordinate >= m
  std::optional<IntVector> slim_witness;    // low-degree boundary element
};

inline StructureReport structure(const OrthogonalPresentation &op,
                                 const AperyData &a,
                                 const Limits &limits = {}) {
  StructureReport r;
  r.is_cohen_macaulay = is_cohen_macaulay(a);
  r.cm_witness = crowded_coset(a);
  Verdict n = normality(op, a);
  r.is_normal = n.holds;
  r.normal_witness = n.witness;
  Verdict s = slimness(op, limits);
  r.is_slim = s.holds;
  r.slim_witness = s.witness;
  r.type = a.type;
  r.index = a.cosets.index();
  r.apery_size = a.ap.size();
  return r;
}

} // namespace sgring
