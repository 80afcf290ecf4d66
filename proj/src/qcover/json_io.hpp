#pragma once

#include "covering.hpp"
#include "groth.hpp"
#include "nilhecke.hpp"
#include "polyrep.hpp"
#include "rootdata.hpp"

#include <json.hpp>

#include <string>

namespace qcover {

// Alphabetically-keyed JSON; map-backed storage keeps every serialization
// byte-stable.
using Json = nlohmann::json;

// ---- quiver documents ----
//
// File layout (vertex ids are 1-based in files, 0-based in memory):
//   {
//     "name": "b01",                      // optional
//     "vertices": [1, 2, 3],
//     "edges": [[1, 2], [3, 2]],
//     "automorphism": {"1": 3, "2": 2, "3": 1},
//     "labels": {"even": 1, "odd": 2},    // optional, one per orbit
//     "parity": {"2": 1},                 // optional overrides
//     "order": [1, 2]                     // optional node order (orbit reps)
//   }
Json quiver_to_json(const QuiverDatum& q);
QuiverDatum quiver_from_json(const Json& doc);
QuiverDatum load_quiver_file(const std::string& path);
void save_quiver_file(const QuiverDatum& q, const std::string& path);

// ---- scalars and series ----
// Laurent polynomial: [[exponent, "coefficient"], ...] with exact rational
// coefficient strings, ascending exponents.
Json laurent_json(const Laurent& x);
// Rational function: {"num": ..., "den": ...}.
Json ratfunc_json(const RatFunc& x);
// Two-component scalar: {"plus": ..., "minus": ...}.
Json pi_scalar_json(const PiScalar& x);
// Truncated series in pi-coordinates: {"order": n, "terms": [[e, c0, c1]...]}.
Json pi_series_json(const PiSeries& s);

Json weight_json(const RootDatum& rd, const Weight& w);
Json datum_json(const RootDatum& rd);
Json char_series_json(const RootDatum& rd, const CharSeries& ch);

// ---- verification reports ----
Json report_json(const QConditionReport& r);
Json report_json(const RelationReport& r);
Json report_json(const PbwReport& r);
Json report_json(const NhReport& r);
Json report_json(const GammaReport& r);
Json report_json(const GramRank& r);
Json report_json(const CatSerreReport& r);
Json report_json(const TypeMReport& r);

// Word spec: either comma-separated node labels or, when every label is a
// single character, a plain string of label characters ("ii" on a one-node
// datum).
Word parse_word(const RootDatum& rd, const std::string& text);

}  // namespace qcover
