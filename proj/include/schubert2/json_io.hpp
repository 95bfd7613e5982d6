#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "schubert2/euler_chow.hpp"
#include "schubert2/matroid.hpp"
#include "schubert2/orbit.hpp"
#include "schubert2/partition.hpp"
#include "schubert2/schubert.hpp"

namespace schubert2 {

using nlohmann::json;

/// Integers wider than 53 bits are emitted as decimal strings so that JSON
/// consumers with double-backed numbers cannot silently lose precision.
inline json bigint_to_json(const bigint& v) {
  static const bigint kSafeMax = (bigint(1) << 53);
  if (v <= kSafeMax && v >= -kSafeMax) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

inline json to_json(const Partition& pi) { return json(pi.parts()); }

inline json to_json(const Rank2Matroid& m) {
  return json{{"n", m.ground_size()}, {"blocks", m.blocks()}, {"loops", m.loops()}};
}

inline json to_json(const BasisMatroid& m) {
  std::vector<std::vector<int>> bases;
  for (Subset b : m.bases()) bases.push_back(subset_elements(b));
  return json{{"n", m.ground_size()}, {"d", m.rank()}, {"bases", bases}};
}

inline json terms_to_json(const ClassVector& v) {
  json terms = json::array();
  for (auto& [idx, c] : v.terms())
    terms.push_back(json{{"a", {idx.a1, idx.a2}}, {"coeff", c}});
  return terms;
}

inline json to_json(const ClassVector& v) {
  return json{{"n", v.ambient_n()},
              {"grading", v.grading() == Grading::Cohomology ? "cohomology" : "homology"},
              {"terms", terms_to_json(v)}};
}

inline json to_json(const ModelIndependenceReport& r) {
  return json{{"models", r.models}, {"agree", r.agree}, {"class", to_json(r.common)}};
}

inline json series_to_json(const SeriesCoefficients& s) {
  if (s.generators.size() == 1) {
    json arr = json::array();
    for (const bigint& c : s.dense()) arr.push_back(bigint_to_json(c));
    return arr;
  }
  json rows = json::array();
  for (auto& [lambda, chi] : s.entries)
    rows.push_back(json{{"lambda", lambda}, {"chi", bigint_to_json(chi)}});
  return rows;
}

}  // namespace schubert2
