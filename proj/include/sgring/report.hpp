#pragma once

// Input documents, analysis and cyclic reports, their JSON form, and the
// end-to-end pipeline used by the command-line tool.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sgring/canonical.hpp"
#include "sgring/cyclic_quotient.hpp"

namespace sgring {

using Json = nlohmann::json;

inline constexpr const char *kSchema = "sgring-lab/1";

inline void to_json(Json &j, const IntVector &v) { j = v.values(); }
inline void from_json(const Json &j, IntVector &v) {
  v = IntVector(j.get<std::vector<Int>>());
}

namespace detail {

template <class T>
void put_optional(Json &j, const char *key, const std::optional<T> &v) {
  j[key] = v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> get_optional(const Json &j, const char *key) {
  if (!j.contains(key) || j.at(key).is_null())
    return std::nullopt;
  return j.at(key).get<T>();
}

} // namespace detail

// ---------------------------------------------------------------- input

struct InputDocument {
  std::size_t dim = 0;
  std::vector<IntVector> generators; // one generator per entry
  std::vector<std::size_t> extreme_hint;
  std::string label;
  Json metadata; // null when absent

  friend bool operator==(const InputDocument &,
                         const InputDocument &) = default;
};

inline void to_json(Json &j, const InputDocument &d) {
  j = Json::object();
  j["dim"] = d.dim;
  j["generators"] = d.generators;
  if (!d.extreme_hint.empty())
    j["extreme_hint"] = d.extreme_hint;
  if (!d.label.empty())
    j["label"] = d.label;
  if (!d.metadata.is_null())
    j["metadata"] = d.metadata;
}

inline void from_json(const Json &j, InputDocument &d) {
  d.dim = j.at("dim").get<std::size_t>();
  d.generators = j.at("generators").get<std::vector<IntVector>>();
  d.extreme_hint = j.value("extreme_hint", std::vector<std::size_t>{});
  d.label = j.value("label", std::string{});
  d.metadata = j.contains("metadata") ? j.at("metadata") : Json();
}

/// {"dim": d, "generators": [[...], ...], ...}; each inner list is one
/// generator.
inline InputDocument parse_input_json(const std::string &text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object())
    throw InvalidInput("input must be a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer() ||
      j.at("dim").get<long long>() <= 0)
    throw InvalidInput("\"dim\" must be a positive integer");
  if (!j.contains("generators") || !j.at("generators").is_array())
    throw InvalidInput("\"generators\" must be a list of integer vectors");
  InputDocument d;
  d.dim = j.at("dim").get<std::size_t>();
  const Json &gens = j.at("generators");
  if (gens.empty())
    throw InvalidInput("empty generator list");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Json &g = gens[k];
    if (!g.is_array() ||
        !std::all_of(g.begin(), g.end(),
                     [](const Json &x) { return x.is_number_integer(); }))
      throw InvalidInput("generator #" + std::to_string(k) +
                         " is not a list of integers");
    if (g.size() != d.dim)
      throw InvalidInput("generator #" + std::to_string(k) + " has length " +
                         std::to_string(g.size()) + ", expected " +
                         std::to_string(d.dim));
    d.generators.push_back(g.get<IntVector>());
  }
  if (j.contains("extreme_hint")) {
    const Json &h = j.at("extreme_hint");
    if (!h.is_array() ||
        !std::all_of(h.begin(), h.end(),
                     [](const Json &x) { return x.is_number_unsigned(); }))
      throw InvalidInput("\"extreme_hint\" must be a list of indices");
    d.extreme_hint = h.get<std::vector<std::size_t>>();
  }
  if (j.contains("label")) {
    if (!j.at("label").is_string())
      throw InvalidInput("\"label\" must be a string");
    d.label = j.at("label").get<std::string>();
  }
  if (j.contains("metadata"))
    d.metadata = j.at("metadata");
  return d;
}

/// Whitespace-separated integer rows of the matrix whose columns generate H.
/// Blank lines and lines starting with '#' are skipped.
inline InputDocument parse_input_matrix(const std::string &text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    std::vector<Int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != tok.size())
        throw InvalidInput("line " + std::to_string(lineno) +
                           ": not an integer: " + tok);
      row.push_back(x);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InvalidInput("line " + std::to_string(lineno) + " has " +
                         std::to_string(row.size()) + " entries, expected " +
                         std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty())
    throw InvalidInput("empty matrix");
  InputDocument d;
  d.dim = rows.size();
  for (std::size_t c = 0; c < rows.front().size(); ++c) {
    std::vector<Int> g;
    for (const auto &r : rows)
      g.push_back(r[c]);
    d.generators.emplace_back(std::move(g));
  }
  return d;
}

// ---------------------------------------------------------------- report

struct OrthogonalSection {
  std::vector<IntVector> generators;
  Int m = 0;
  std::vector<std::vector<Int>> transform; // rows of iota
  std::vector<IntVector> source_extreme;   // b_1, ..., b_d

  friend bool operator==(const OrthogonalSection &,
                         const OrthogonalSection &) = default;
};

struct AperySection {
  std::vector<IntVector> elements; // orthogonal
  std::vector<IntVector> socle;    // orthogonal
  std::vector<IntVector> socle_source;
  Int index = 0; // [G(H) : ZE]

  friend bool operator==(const AperySection &, const AperySection &) = default;
};

struct Verdicts {
  bool simplicial = true;
  bool cohen_macaulay = false;
  bool normal = false;
  bool slim = false;
  std::size_t type = 0;
  std::optional<CosetLabel> cm_coset;     // crowded coset when not CM
  std::vector<IntVector> cm_coset_members;
  std::optional<IntVector> normal_witness; // orthogonal
  std::optional<IntVector> slim_witness;   // orthogonal
  std::optional<bool> almost_gorenstein;   // null when not CM

  friend bool operator==(const Verdicts &, const Verdicts &) = default;
};

struct CanonicalGeneratorRecord {
  IntVector w;
  IntVector v;
  std::optional<IntVector> w_source;
  std::optional<IntVector> v_source;

  friend bool operator==(const CanonicalGeneratorRecord &,
                         const CanonicalGeneratorRecord &) = default;
};

struct CanonicalSection {
  std::vector<CanonicalGeneratorRecord> generators;
  std::vector<IntVector> minimal; // orthogonal
  Int a_invariant_orthogonal = 0;
  Int a_invariant_source = 0;

  friend bool operator==(const CanonicalSection &,
                         const CanonicalSection &) = default;
};

struct CertificateRecord {
  IntVector h;
  IntVector h_prime;
  IntVector b;

  friend bool operator==(const CertificateRecord &,
                         const CertificateRecord &) = default;
};

struct WitnessRecord {
  IntVector w;
  IntVector v;
  std::optional<IntVector> w_source;
  std::optional<IntVector> v_source;
  Int degree_orthogonal = 0;
  std::optional<Int> degree_source;
  std::vector<CertificateRecord> certificates;

  friend bool operator==(const WitnessRecord &,
                         const WitnessRecord &) = default;
};

struct MultiplicityRecord {
  IntVector w;
  Int value = 0;

  friend bool operator==(const MultiplicityRecord &,
                         const MultiplicityRecord &) = default;
};

struct AGSection {
  bool is_ag = false;
  std::vector<WitnessRecord> witnesses;
  std::vector<MultiplicityRecord> quotient_multiplicities;

  friend bool operator==(const AGSection &, const AGSection &) = default;
};

struct SeriesSection {
  std::vector<std::pair<Int, Int>> numerator; // (exponent, coefficient)
  std::vector<Int> denominator;
  std::vector<Int> truncation; // t^0 .. t^N, only with --truncate

  friend bool operator==(const SeriesSection &,
                         const SeriesSection &) = default;
};

struct VerificationSection {
  bool passed = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;

  friend bool operator==(const VerificationSection &,
                         const VerificationSection &) = default;
};

struct LimitsSection {
  Int max_box = 0;
  std::size_t max_apery = 0;

  friend bool operator==(const LimitsSection &,
                         const LimitsSection &) = default;
};

struct AnalysisReport {
  std::string schema = kSchema;
  InputDocument input;
  OrthogonalSection orthogonal;
  AperySection apery;
  Verdicts verdicts;
  std::optional<CanonicalSection> canonical;
  std::optional<AGSection> ag;
  std::optional<SeriesSection> hilbert;
  std::optional<VerificationSection> verification;
  LimitsSection limits;
  std::optional<Int> timing_us;

  friend bool operator==(const AnalysisReport &,
                         const AnalysisReport &) = default;
};

inline void to_json(Json &j, const OrthogonalSection &s) {
  j = {{"generators", s.generators},
       {"m", s.m},
       {"transform", s.transform},
       {"source_extreme", s.source_extreme}};
}
inline void from_json(const Json &j, OrthogonalSection &s) {
  j.at("generators").get_to(s.generators);
  j.at("m").get_to(s.m);
  j.at("transform").get_to(s.transform);
  j.at("source_extreme").get_to(s.source_extreme);
}

inline void to_json(Json &j, const AperySection &s) {
  j = {{"elements", s.elements},
       {"socle", s.socle},
       {"socle_source", s.socle_source},
       {"index", s.index},
       {"size", s.elements.size()}};
}
inline void from_json(const Json &j, AperySection &s) {
  j.at("elements").get_to(s.elements);
  j.at("socle").get_to(s.socle);
  j.at("socle_source").get_to(s.socle_source);
  j.at("index").get_to(s.index);
}

inline void to_json(Json &j, const Verdicts &v) {
  j = {{"simplicial", v.simplicial},
       {"cohen_macaulay", v.cohen_macaulay},
       {"normal", v.normal},
       {"slim", v.slim},
       {"type", v.type},
       {"cm_coset_members", v.cm_coset_members}};
  detail::put_optional(j, "cm_coset", v.cm_coset);
  detail::put_optional(j, "normal_witness", v.normal_witness);
  detail::put_optional(j, "slim_witness", v.slim_witness);
  detail::put_optional(j, "almost_gorenstein", v.almost_gorenstein);
}
inline void from_json(const Json &j, Verdicts &v) {
  j.at("simplicial").get_to(v.simplicial);
  j.at("cohen_macaulay").get_to(v.cohen_macaulay);
  j.at("normal").get_to(v.normal);
  j.at("slim").get_to(v.slim);
  j.at("type").get_to(v.type);
  j.at("cm_coset_members").get_to(v.cm_coset_members);
  v.cm_coset = detail::get_optional<CosetLabel>(j, "cm_coset");
  v.normal_witness = detail::get_optional<IntVector>(j, "normal_witness");
  v.slim_witness = detail::get_optional<IntVector>(j, "slim_witness");
  v.almost_gorenstein = detail::get_optional<bool>(j, "almost_gorenstein");
}

inline void to_json(Json &j, const CanonicalGeneratorRecord &r) {
  j = {{"w", r.w}, {"v", r.v}};
  detail::put_optional(j, "w_source", r.w_source);
  detail::put_optional(j, "v_source", r.v_source);
}
inline void from_json(const Json &j, CanonicalGeneratorRecord &r) {
  j.at("w").get_to(r.w);
  j.at("v").get_to(r.v);
  r.w_source = detail::get_optional<IntVector>(j, "w_source");
  r.v_source = detail::get_optional<IntVector>(j, "v_source");
}

inline void to_json(Json &j, const CanonicalSection &s) {
  j = {{"generators", s.generators},
       {"minimal", s.minimal},
       {"a_invariant", {{"orthogonal", s.a_invariant_orthogonal},
                        {"source", s.a_invariant_source}}}};
}
inline void from_json(const Json &j, CanonicalSection &s) {
  j.at("generators").get_to(s.generators);
  j.at("minimal").get_to(s.minimal);
  j.at("a_invariant").at("orthogonal").get_to(s.a_invariant_orthogonal);
  j.at("a_invariant").at("source").get_to(s.a_invariant_source);
}

inline void to_json(Json &j, const CertificateRecord &c) {
  j = {{"h", c.h}, {"h_prime", c.h_prime}, {"b", c.b}};
}
inline void from_json(const Json &j, CertificateRecord &c) {
  j.at("h").get_to(c.h);
  j.at("h_prime").get_to(c.h_prime);
  j.at("b").get_to(c.b);
}

inline void to_json(Json &j, const WitnessRecord &r) {
  j = {{"w", r.w},
       {"v", r.v},
       {"degree_orthogonal", r.degree_orthogonal},
       {"certificates", r.certificates}};
  detail::put_optional(j, "w_source", r.w_source);
  detail::put_optional(j, "v_source", r.v_source);
  detail::put_optional(j, "degree_source", r.degree_source);
}
inline void from_json(const Json &j, WitnessRecord &r) {
  j.at("w").get_to(r.w);
  j.at("v").get_to(r.v);
  j.at("degree_orthogonal").get_to(r.degree_orthogonal);
  j.at("certificates").get_to(r.certificates);
  r.w_source = detail::get_optional<IntVector>(j, "w_source");
  r.v_source = detail::get_optional<IntVector>(j, "v_source");
  r.degree_source = detail::get_optional<Int>(j, "degree_source");
}

inline void to_json(Json &j, const MultiplicityRecord &r) {
  j = {{"w", r.w}, {"value", r.value}};
}
inline void from_json(const Json &j, MultiplicityRecord &r) {
  j.at("w").get_to(r.w);
  j.at("value").get_to(r.value);
}

inline void to_json(Json &j, const AGSection &s) {
  j = {{"is_ag", s.is_ag},
       {"witnesses", s.witnesses},
       {"quotient_multiplicities", s.quotient_multiplicities}};
}
inline void from_json(const Json &j, AGSection &s) {
  j.at("is_ag").get_to(s.is_ag);
  j.at("witnesses").get_to(s.witnesses);
  j.at("quotient_multiplicities").get_to(s.quotient_multiplicities);
}

inline void to_json(Json &j, const SeriesSection &s) {
  Json num = Json::array();
  for (const auto &[e, c] : s.numerator)
    num.push_back({{"exponent", e}, {"coefficient", c}});
  j = {{"numerator", num}, {"denominator", s.denominator}};
  if (!s.truncation.empty())
    j["truncation"] = s.truncation;
}
inline void from_json(const Json &j, SeriesSection &s) {
  s.numerator.clear();
  for (const Json &t : j.at("numerator"))
    s.numerator.emplace_back(t.at("exponent").get<Int>(),
                             t.at("coefficient").get<Int>());
  j.at("denominator").get_to(s.denominator);
  s.truncation = j.value("truncation", std::vector<Int>{});
}

inline void to_json(Json &j, const VerificationSection &s) {
  j = {{"passed", s.passed}, {"checks", s.checks}, {"failures", s.failures}};
}
inline void from_json(const Json &j, VerificationSection &s) {
  j.at("passed").get_to(s.passed);
  j.at("checks").get_to(s.checks);
  j.at("failures").get_to(s.failures);
}

inline void to_json(Json &j, const LimitsSection &s) {
  j = {{"max_box", s.max_box}, {"max_apery", s.max_apery}};
}
inline void from_json(const Json &j, LimitsSection &s) {
  j.at("max_box").get_to(s.max_box);
  j.at("max_apery").get_to(s.max_apery);
}

inline void to_json(Json &j, const AnalysisReport &r) {
  j = {{"schema", r.schema},     {"input", r.input},
       {"orthogonal", r.orthogonal}, {"apery", r.apery},
       {"verdicts", r.verdicts}, {"limits", r.limits}};
  detail::put_optional(j, "canonical", r.canonical);
  detail::put_optional(j, "ag", r.ag);
  detail::put_optional(j, "hilbert", r.hilbert);
  if (r.verification)
    j["verification"] = *r.verification;
  if (r.timing_us)
    j["timing_us"] = *r.timing_us;
}
inline void from_json(const Json &j, AnalysisReport &r) {
  j.at("schema").get_to(r.schema);
  if (r.schema != kSchema)
    throw InvalidInput("unknown schema " + r.schema);
  j.at("input").get_to(r.input);
  j.at("orthogonal").get_to(r.orthogonal);
  j.at("apery").get_to(r.apery);
  j.at("verdicts").get_to(r.verdicts);
  j.at("limits").get_to(r.limits);
  r.canonical = detail::get_optional<CanonicalSection>(j, "canonical");
  r.ag = detail::get_optional<AGSection>(j, "ag");
  r.hilbert = detail::get_optional<SeriesSection>(j, "hilbert");
  r.verification = detail::get_optional<VerificationSection>(j, "verification");
  r.timing_us = detail::get_optional<Int>(j, "timing_us");
}

// ---------------------------------------------------------------- pipeline

struct AnalyzeOptions {
  Limits limits;
  std::optional<Int> truncate;
  bool verify = false;
  bool timing = false;
};

/// Internal consistency checks run under --verify. Each check is named; a
/// check that would exceed a resource bound is recorded as skipped.
inline VerificationSection verify_analysis(const OrthogonalPresentation &op,
                                           const AperyData &a,
                                           const Limits &limits,
                                           Int series_depth) {
  VerificationSection v;
  auto check = [&](const std::string &name, auto &&body) {
    try {
      std::string failure = body();
      v.checks.push_back(name);
      if (!failure.empty())
        v.failures.push_back(name + ": " + failure);
    } catch (const ResourceLimit &e) {
      v.checks.push_back(name + " (skipped: " + e.what() + ")");
    }
  };
  const std::vector<IntVector> extreme = op.extreme_set();
  auto in_e_plus_h = [&](const IntVector &x) {
    for (const IntVector &b : extreme)
      if (b.dominated_by(x) && op.contains(x - b))
        return true;
    return false;
  };

  check("apery-closure", [&]() -> std::string {
    std::unordered_set<IntVector, IntVectorHash> ap(a.ap.begin(), a.ap.end());
    for (const IntVector &u : a.ap) {
      if (!op.contains(u) || in_e_plus_h(u))
        return u.to_string() + " is not an Apery element";
      for (const IntVector &g : op.base().generators()) {
        IntVector s = u + g;
        if (!ap.contains(s) && !in_e_plus_h(s))
          return s.to_string() + " escapes the Apery set";
      }
    }
    return {};
  });
  check("coset-coverage", [&]() -> std::string {
    if (static_cast<Int>(a.by_coset.size()) != a.cosets.index())
      return std::to_string(a.by_coset.size()) + " cosets hit of " +
             std::to_string(a.cosets.index());
    return {};
  });
  const bool cm = is_cohen_macaulay(a);
  check("cm-agreement", [&]() -> std::string {
    bool by_count = static_cast<Int>(a.ap.size()) == a.cosets.index();
    bool by_crowding = !crowded_coset(a).has_value();
    if (cm != by_count || cm != by_crowding)
      return "coset, count and crowding tests disagree";
    return {};
  });
  if (!cm) {
    v.passed = v.failures.empty();
    return v;
  }

  const AGReport ag = ag_check(op, a);
  check("certificates", [&]() -> std::string {
    for (const AGWitness &w : ag.witnesses)
      for (const Certificate &c : w.certificates)
        if (c.h + c.h_prime != w.w + c.b ||
            std::find(extreme.begin(), extreme.end(), c.b) == extreme.end())
          return "certificate for " + c.h.to_string() + " fails";
    return {};
  });
  check("multiplicity-lower-bound", [&]() -> std::string {
    for (const auto &[w, q] : ag.quotient_multiplicities)
      if (q < static_cast<Int>(a.type) - 1)
        return "multiplicity below type - 1 at " + w.to_string();
    return {};
  });
  check("quotient-series", [&]() -> std::string {
    for (const auto &[w, q] : ag.quotient_multiplicities) {
      Int s = limit_at_one(quotient_series(op, a, w), op.dim() - 1);
      if (s != q)
        return "series value " + std::to_string(s) + " != " +
               std::to_string(q) + " at " + w.to_string();
    }
    return {};
  });
  check("hilbert-series", [&]() -> std::string {
    std::vector<Int> coeffs = series_truncate(hilbert_numerator(op, a),
                                              series_depth);
    std::vector<Int> counts(coeffs.size(), 0);
    for (const IntVector &h :
         enumerate_up_to_degree(op.base(), series_depth, limits.max_elements))
      ++counts[static_cast<std::size_t>(h.degree())];
    if (coeffs != counts)
      return "expansion differs from element counts";
    return {};
  });
  check("canonical-series", [&]() -> std::string {
    CanonicalData cd = canonical_generators(op, a);
    Int low = cd.socle_generators.front().second.degree();
    for (const auto &[w, g] : cd.socle_generators)
      low = std::min(low, g.degree());
    std::unordered_set<IntVector, IntVectorHash> omega;
    if (series_depth >= low)
      for (const IntVector &h : enumerate_up_to_degree(
               op.base(), series_depth - low, limits.max_elements))
        for (const auto &[w, g] : cd.socle_generators) {
          IntVector x = g + h;
          if (x.degree() <= series_depth)
            omega.insert(std::move(x));
        }
    std::vector<Int> counts(
        static_cast<std::size_t>(std::max<Int>(series_depth - low + 1, 0)), 0);
    for (const IntVector &x : omega)
      ++counts[static_cast<std::size_t>(x.degree() - low)];
    if (series_expand(canonical_series(op, a), low, series_depth) != counts)
      return "expansion differs from canonical module counts";
    return {};
  });
  v.passed = v.failures.empty();
  return v;
}

inline AnalysisReport analyze(const InputDocument &doc,
                              const AnalyzeOptions &opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.input = doc;
  r.limits = {opts.limits.max_box_volume, opts.limits.max_apery};

  Presentation p(doc.dim, doc.generators);
  for (std::size_t i : doc.extreme_hint)
    if (i >= doc.generators.size())
      throw InvalidInput("extreme_hint index " + std::to_string(i) +
                         " out of range");
  OrthogonalPresentation op = orthogonalize(p, opts.limits, doc.extreme_hint);
  r.orthogonal = {op.base().generators(), op.order(),
                  op.transform().to_rows(), op.source_extreme()};

  AperyData a = apery_set(op, opts.limits);
  r.apery.elements = a.ap;
  r.apery.socle = a.soc;
  for (const IntVector &s : a.soc)
    r.apery.socle_source.push_back(op.to_source_checked(s));
  std::sort(r.apery.socle_source.begin(), r.apery.socle_source.end());
  r.apery.index = a.cosets.index();

  StructureReport st = structure(op, a, opts.limits);
  r.verdicts.cohen_macaulay = st.is_cohen_macaulay;
  r.verdicts.normal = st.is_normal;
  r.verdicts.slim = st.is_slim;
  r.verdicts.type = st.type;
  r.verdicts.cm_coset = st.cm_witness;
  if (st.cm_witness) {
    r.verdicts.cm_coset_members = a.by_coset.at(*st.cm_witness);
    std::sort(r.verdicts.cm_coset_members.begin(),
              r.verdicts.cm_coset_members.end());
  }
  r.verdicts.normal_witness = st.normal_witness;
  r.verdicts.slim_witness = st.slim_witness;

  if (st.is_cohen_macaulay) {
    CanonicalData cd = canonical_generators(op, a);
    CanonicalSection cs;
    for (const auto &[w, v] : cd.socle_generators)
      cs.generators.push_back({w, v, op.to_source(w), op.to_source(v)});
    cs.minimal = cd.minimal_generators;
    cs.a_invariant_orthogonal = cd.a_invariant;
    Int top = r.apery.socle_source.front().degree();
    for (const IntVector &s : r.apery.socle_source)
      top = std::max(top, s.degree());
    Int extreme_degree = 0;
    for (const IntVector &b : op.source_extreme())
      extreme_degree = checked::add(extreme_degree, b.degree());
    cs.a_invariant_source = checked::sub(top, extreme_degree);
    r.canonical = std::move(cs);

    AGReport ag = ag_check(op, a);
    AGSection as;
    as.is_ag = ag.is_ag;
    for (const AGWitness &w : ag.witnesses) {
      WitnessRecord wr{w.w, w.v, op.to_source(w.w), op.to_source(w.v),
                       w.v.degree(), std::nullopt, {}};
      if (wr.v_source)
        wr.degree_source = wr.v_source->degree();
      for (const Certificate &c : w.certificates)
        wr.certificates.push_back({c.h, c.h_prime, c.b});
      as.witnesses.push_back(std::move(wr));
    }
    for (const auto &[w, q] : ag.quotient_multiplicities)
      as.quotient_multiplicities.push_back({w, q});
    r.ag = std::move(as);
    r.verdicts.almost_gorenstein = ag.is_ag;

    HilbertSeries hs = hilbert_numerator(op, a);
    SeriesSection ss;
    for (const auto &[e, c] : hs.numerator)
      ss.numerator.emplace_back(e, c);
    ss.denominator = hs.denominator;
    if (opts.truncate)
      ss.truncation = series_truncate(hs, *opts.truncate);
    r.hilbert = std::move(ss);
  }

  if (opts.verify)
    r.verification = verify_analysis(
        op, a, opts.limits,
        opts.truncate.value_or(checked::mul(3 * op.order(),
                                            static_cast<Int>(op.dim()))));
  if (opts.timing)
    r.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return r;
}

// ---------------------------------------------------------------- cyclic

struct CyclicReport {
  std::string schema = kSchema;
  Int n = 0;
  Int m1 = 0;
  Int m2 = 0;
  Int c = 0;
  std::vector<Int> hj;
  bool is_ag = false;
  std::optional<Int> p;
  std::optional<Int> q;
  std::optional<IntVector> ulrich;
  std::optional<VerificationSection> verification;

  friend bool operator==(const CyclicReport &, const CyclicReport &) = default;
};

inline void to_json(Json &j, const CyclicReport &r) {
  j = {{"schema", r.schema}, {"n", r.n},   {"m1", r.m1},       {"m2", r.m2},
       {"c", r.c},           {"hj", r.hj}, {"is_ag", r.is_ag}};
  detail::put_optional(j, "p", r.p);
  detail::put_optional(j, "q", r.q);
  detail::put_optional(j, "ulrich", r.ulrich);
  if (r.verification)
    j["verification"] = *r.verification;
}
inline void from_json(const Json &j, CyclicReport &r) {
  j.at("schema").get_to(r.schema);
  j.at("n").get_to(r.n);
  j.at("m1").get_to(r.m1);
  j.at("m2").get_to(r.m2);
  j.at("c").get_to(r.c);
  j.at("hj").get_to(r.hj);
  j.at("is_ag").get_to(r.is_ag);
  r.p = detail::get_optional<Int>(j, "p");
  r.q = detail::get_optional<Int>(j, "q");
  r.ulrich = detail::get_optional<IntVector>(j, "ulrich");
  r.verification = detail::get_optional<VerificationSection>(j, "verification");
}

inline CyclicReport cyclic_report(Int n, Int m1, bool verify = false,
                                  const Limits &limits = {}) {
  CyclicQuotientSpec spec = cyclic_spec(n, m1);
  CyclicReport r;
  r.n = n;
  r.m1 = m1;
  r.m2 = spec.m2;
  r.c = spec.c;
  r.hj = hj_expansion(n, m1).coefficients;
  r.is_ag = is_ag_cyclic(n, m1).first;
  if (spec.pq) {
    r.p = spec.pq->first;
    r.q = spec.pq->second;
    if (m1 > 1)
      r.ulrich = ulrich_element_cyclic(n, m1);
  }
  if (verify) {
    CyclicValidation cv = cross_validate(n, m1, limits);
    VerificationSection vs;
    vs.checks = {"criterion-vs-shape", "criterion-vs-pipeline",
                 "ulrich-element", "cohen-macaulay", "normal"};
    vs.failures = cv.discrepancies;
    vs.passed = cv.ok();
    r.verification = std::move(vs);
  }
  return r;
}

// ---------------------------------------------------------------- batch

struct ErrorRecord {
  std::string kind; // invalid_input, resource_limit, not_simplicial, internal
  std::string message;
  int exit_code = 0;

  friend bool operator==(const ErrorRecord &, const ErrorRecord &) = default;
};

inline void to_json(Json &j, const ErrorRecord &e) {
  j = {{"kind", e.kind}, {"message", e.message}, {"exit_code", e.exit_code}};
}
inline void from_json(const Json &j, ErrorRecord &e) {
  j.at("kind").get_to(e.kind);
  j.at("message").get_to(e.message);
  j.at("exit_code").get_to(e.exit_code);
}

/// Maps an exception to the CLI exit code: 2 malformed input, 3 resource
/// limit (overflow included), 4 not simplicial, 1 anything else.
inline ErrorRecord classify_error(const std::exception &e) {
  if (dynamic_cast<const InvalidInput *>(&e))
    return {"invalid_input", e.what(), 2};
  if (dynamic_cast<const ArithmeticOverflow *>(&e))
    return {"overflow", e.what(), 3};
  if (dynamic_cast<const ResourceLimit *>(&e))
    return {"resource_limit", e.what(), 3};
  if (dynamic_cast<const NotSimplicial *>(&e))
    return {"not_simplicial", e.what(), 4};
  if (dynamic_cast<const Json::exception *>(&e))
    return {"invalid_input", e.what(), 2};
  return {"internal", e.what(), 1};
}

struct BatchItem {
  std::string source; // file path or "cyclic n m1"
  std::optional<AnalysisReport> analysis;
  std::optional<CyclicReport> cyclic;
  std::optional<ErrorRecord> error;

  /// AG verdict, if the item produced one. Non-CM inputs count as not AG.
  std::optional<bool> ag() const {
    if (analysis)
      return analysis->verdicts.almost_gorenstein.value_or(false);
    if (cyclic)
      return cyclic->is_ag;
    return std::nullopt;
  }

  friend bool operator==(const BatchItem &, const BatchItem &) = default;
};

inline void to_json(Json &j, const BatchItem &b) {
  j = {{"source", b.source}};
  if (b.analysis)
    j["analysis"] = *b.analysis;
  if (b.cyclic)
    j["cyclic"] = *b.cyclic;
  if (b.error)
    j["error"] = *b.error;
}
inline void from_json(const Json &j, BatchItem &b) {
  j.at("source").get_to(b.source);
  b.analysis = detail::get_optional<AnalysisReport>(j, "analysis");
  b.cyclic = detail::get_optional<CyclicReport>(j, "cyclic");
  b.error = detail::get_optional<ErrorRecord>(j, "error");
}

struct BatchSummary {
  std::size_t total = 0;
  std::size_t ag = 0;
  std::size_t not_ag = 0;
  std::size_t errors = 0;

  friend bool operator==(const BatchSummary &, const BatchSummary &) = default;
};

inline void to_json(Json &j, const BatchSummary &s) {
  j = {{"total", s.total},
       {"ag", s.ag},
       {"not_ag", s.not_ag},
       {"errors", s.errors}};
}
inline void from_json(const Json &j, BatchSummary &s) {
  j.at("total").get_to(s.total);
  j.at("ag").get_to(s.ag);
  j.at("not_ag").get_to(s.not_ag);
  j.at("errors").get_to(s.errors);
}

inline BatchSummary summarize(const std::vector<BatchItem> &items) {
  BatchSummary s;
  s.total = items.size();
  for (const BatchItem &b : items) {
    if (b.error)
      ++s.errors;
    else if (b.ag().value_or(false))
      ++s.ag;
    else
      ++s.not_ag;
  }
  return s;
}

/// Every coprime (n, m1) with lo <= n <= hi and 0 < m1 < n.
inline std::vector<BatchItem> cyclic_batch(Int lo, Int hi, bool verify,
                                           const Limits &limits = {}) {
  std::vector<BatchItem> items;
  for (Int n = std::max<Int>(lo, 2); n <= hi; ++n)
    for (Int m1 = 1; m1 < n; ++m1) {
      if (gcd(n, m1) != 1)
        continue;
      BatchItem b;
      b.source = "cyclic " + std::to_string(n) + " " + std::to_string(m1);
      try {
        b.cyclic = cyclic_report(n, m1, verify, limits);
      } catch (const std::exception &e) {
        b.error = classify_error(e);
      }
      items.push_back(std::move(b));
    }
  return items;
}

// ---------------------------------------------------------------- text

inline std::string join_vectors(const std::vector<IntVector> &vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i)
    s += (i ? ", " : "") + vs[i].to_string();
  return s + "}";
}

inline std::string optional_vector(const std::optional<IntVector> &v) {
  return v ? v->to_string() : std::string("-");
}

inline std::string render_text(const AnalysisReport &r) {
  std::ostringstream o;
  if (!r.input.label.empty())
    o << "label: " << r.input.label << "\n";
  o << "dimension: " << r.input.dim << "\n";
  o << "orthogonal generators (m = " << r.orthogonal.m
    << "): " << join_vectors(r.orthogonal.generators) << "\n";
  o << "extreme rays (source): " << join_vectors(r.orthogonal.source_extreme)
    << "\n";
  o << "Apery set (" << r.apery.elements.size()
    << " elements, index " << r.apery.index
    << "): " << join_vectors(r.apery.elements) << "\n";
  o << "socle (orthogonal): " << join_vectors(r.apery.socle) << "\n";
  o << "socle (source): " << join_vectors(r.apery.socle_source) << "\n";
  const Verdicts &v = r.verdicts;
  o << "Cohen-Macaulay: " << (v.cohen_macaulay ? "yes" : "no");
  if (!v.cohen_macaulay)
    o << " (coset shared by " << join_vectors(v.cm_coset_members) << ")";
  o << "\nnormal: " << (v.normal ? "yes" : "no");
  if (v.normal_witness)
    o << " (witness " << v.normal_witness->to_string() << ")";
  o << "\nslim: " << (v.slim ? "yes" : "no");
  if (v.slim_witness)
    o << " (witness " << v.slim_witness->to_string() << ", degree "
      << v.slim_witness->degree() << ")";
  o << "\ntype: " << v.type << "\n";
  if (r.canonical)
    o << "a-invariant: " << r.canonical->a_invariant_orthogonal
      << " (orthogonal), " << r.canonical->a_invariant_source
      << " (source)\n";
  if (r.ag) {
    o << "almost Gorenstein: " << (r.ag->is_ag ? "yes" : "no") << "\n";
    for (const WitnessRecord &w : r.ag->witnesses) {
      o << "  Ulrich element " << w.v.to_string() << " (orthogonal, degree "
        << w.degree_orthogonal << "), " << optional_vector(w.v_source)
        << " (source";
      if (w.degree_source)
        o << ", degree " << *w.degree_source;
      o << ") from w = " << w.w.to_string() << "\n";
      for (const CertificateRecord &c : w.certificates)
        o << "    " << c.h.to_string() << " + " << c.h_prime.to_string()
          << " = " << w.w.to_string() << " + " << c.b.to_string() << "\n";
    }
    o << "quotient multiplicities:";
    for (const MultiplicityRecord &q : r.ag->quotient_multiplicities)
      o << " " << q.w.to_string() << " -> " << q.value << ";";
    o << "\n";
  }
  if (r.hilbert) {
    o << "Hilbert series numerator:";
    for (const auto &[e, c] : r.hilbert->numerator)
      o << " " << c << "*t^" << e;
    o << " over (1 - t^" << r.orthogonal.m << ")^"
      << r.hilbert->denominator.size() << "\n";
    if (!r.hilbert->truncation.empty()) {
      o << "expansion:";
      for (Int c : r.hilbert->truncation)
        o << " " << c;
      o << "\n";
    }
  }
  if (r.verification) {
    o << "verification: " << (r.verification->passed ? "passed" : "FAILED")
      << " (" << r.verification->checks.size() << " checks)\n";
    for (const std::string &f : r.verification->failures)
      o << "  " << f << "\n";
  }
  if (r.timing_us)
    o << "time: " << *r.timing_us << " us\n";
  return o.str();
}

inline std::string render_text(const CyclicReport &r) {
  std::ostringstream o;
  o << "n = " << r.n << ", m1 = " << r.m1 << ", m2 = " << r.m2
    << ", c = " << r.c << "\n";
  o << "Hirzebruch-Jung: [[";
  for (std::size_t i = 0; i < r.hj.size(); ++i)
    o << (i ? "," : "") << r.hj[i];
  o << "]]\n";
  o << "almost Gorenstein: " << (r.is_ag ? "yes" : "no") << "\n";
  if (r.p && r.q)
    o << "p = " << *r.p << ", q = " << *r.q << "\n";
  if (r.ulrich)
    o << "Ulrich element: " << r.ulrich->to_string() << "\n";
  if (r.verification) {
    o << "verification: " << (r.verification->passed ? "passed" : "FAILED")
      << "\n";
    for (const std::string &f : r.verification->failures)
      o << "  " << f << "\n";
  }
  return o.str();
}

inline std::string render_text(const BatchItem &b) {
  if (b.error)
    return b.source + ": error (" + b.error->kind + "): " + b.error->message;
  if (b.cyclic) {
    const CyclicReport &c = *b.cyclic;
    std::string s = b.source + ": " + (c.is_ag ? "AG" : "not AG") + ", HJ [[";
    for (std::size_t i = 0; i < c.hj.size(); ++i)
      s += (i ? "," : "") + std::to_string(c.hj[i]);
    s += "]]";
    if (c.ulrich)
      s += ", v = " + c.ulrich->to_string();
    if (c.verification && !c.verification->passed)
      s += ", VERIFICATION FAILED";
    return s;
  }
  const AnalysisReport &a = *b.analysis;
  const Verdicts &v = a.verdicts;
  std::string s = b.source + ": ";
  s += std::string(v.cohen_macaulay ? "CM" : "not CM") + ", " +
       (v.normal ? "normal" : "not normal") + ", " +
       (v.slim ? "slim" : "not slim") + ", type " + std::to_string(v.type) +
       ", " + (v.almost_gorenstein.value_or(false) ? "AG" : "not AG");
  if (a.verification && !a.verification->passed)
    s += ", VERIFICATION FAILED";
  return s;
}

inline std::string render_text(const BatchSummary &s) {
  return "summary: " + std::to_string(s.total) + " items, " +
         std::to_string(s.ag) + " AG, " + std::to_string(s.not_ag) +
         " not AG, " + std::to_string(s.errors) + " errors";
}

} // namespace sgring
