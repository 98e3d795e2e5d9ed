#pragma once

#include "tanglecalc/classify.hpp"
#include "tanglecalc/link.hpp"
#include "tanglecalc/pd.hpp"
#include "tanglecalc/rewrite.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace tanglecalc {

/// Object-key order is part of the output contract (byte-stable emission),
/// hence the ordered variant.
using Json = nlohmann::ordered_json;

std::string statusString(Status s);
std::string axisString(Axis a);

/// {"kind": "rational" | "q_product" | "contains_q", ...detail fields}.
Json reasonJson(const Reason& r);

/// {"irreducible", "disk" (null unless rational), "annuli", "tori"}.
Json censusJson(const SurfaceCensus& c);

/// {"input", "normal_form", "status", "reasons", "trace"}.
Json verdictJson(const std::string& input, const Verdict& v,
                 const std::vector<TraceEntry>& trace);

/// {"status", "reasons", "prime", "split", "canonical_montesinos"?}.
Json linkReportJson(const LinkReport& report);

/// {"crossings", "signs", "components"}.
Json pdJson(const PDCode& code);

}  // namespace tanglecalc
