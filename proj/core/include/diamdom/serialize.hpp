#pragma once

#include <string>

#include "diamdom/domination.hpp"
#include "diamdom/gadgets.hpp"
#include "diamdom/matching.hpp"
#include "diamdom/recognition.hpp"

// JSON documents with a fixed key order. Infinite distances are null.

namespace diamdom {

std::string to_json(const ClassReport& report);
/// {gamma, set, method, verified}; `verified` re-checks the set against `g`.
std::string to_json(const Graph& g, const DominationCertificate& cert);
/// {size, edges, maximal}.
std::string to_json(const Graph& g, const Matching& m);
/// Sidecar written next to G': {kind, k, kprime, d, n, m, notices, provenance}.
std::string sidecar_json(const ReductionInstance& inst);
std::string to_json(const ReductionReport& report);

}  // namespace diamdom
