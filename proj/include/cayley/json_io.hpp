#pragma once

#include <string>

#include "json.hpp"

#include "cayley/cellcoh.hpp"
#include "cayley/cyclotomic.hpp"
#include "cayley/kform.hpp"
#include "cayley/spin7.hpp"
#include "cayley/verify.hpp"

namespace cayley::json_io {

// JSON encodings used by the CLI.  All numeric payloads are exact: rationals
// and big integers travel as decimal strings ("-3/2", "12"), never as
// floating point.  Parsers accept plain JSON integers for convenience where
// they cannot lose precision.

using json = nlohmann::ordered_json;

// CycNum <-> the 4 power-basis coordinates as rational strings.
json cyc_to_json(const CycNum& z);
// Accepts the 4-string array, a single rational string, or a JSON integer.
CycNum cyc_from_json(const json& j);

// KForm <-> {"dim": n, "degree": k, "terms": [{"idx": [...], "coeff": ...}]}
json kform_to_json(const KForm& f);
KForm kform_from_json(const json& j);

// TwoForm8 <-> {"terms": [{"idx": [a, b], "coeff": ...}]} for scalar forms,
// or {"matDim": d, "terms": [{"idx": [a, b], "matrix": [[...], ...]}]} for
// lie-algebra-valued ones.  Validated on parse.
json two_form_to_json(const spin7::TwoForm8& f);
spin7::TwoForm8 two_form_from_json(const json& j);

// CochainComplex <-> {"ranks": [...], "deltas": [[[...], ...], ...]};
// validated (shapes and delta delta = 0) on parse.
json complex_to_json(const cellcoh::CochainComplex& c);
cellcoh::CochainComplex complex_from_json(const json& j);

// CohGroup -> {"betti": b, "torsion": ["d1", ...]}
json coh_group_to_json(const cellcoh::CohGroup& g);

// OrientabilityVerdict -> {"h3": ..., "criterionHolds": ..., "reason": ...}
json verdict_to_json(const cellcoh::OrientabilityVerdict& v);

// RunReport -> {"check": ..., "population": ..., "violations": ..., "seed":
// ...} plus "elapsedMs" when with_timings is set (timings are opt-in so that
// identical runs stay byte-identical).
json report_to_json(const verify::RunReport& r, bool with_timings);

// Strict file loader: reads the whole file and parses it, rethrowing parse
// failures as cayley::Error with the position information preserved.
json load_json_file(const std::string& path);

// Exact rational from a decimal string such as "-3/2" or "12".
mpq_class parse_rational(const std::string& text);

} // namespace cayley::json_io
