#pragma once

// JSON views of the core value types.  Key order is fixed (insertion
// order via nlohmann::ordered_json) and rationals serialize as canonical
// "p/q" strings, so identical inputs yield byte-identical output.

#include <json.hpp>

#include <string>

#include "seshadri/bounds.hpp"
#include "seshadri/certificates.hpp"
#include "seshadri/enumerate.hpp"
#include "seshadri/surface.hpp"

namespace seshadri {

using OrderedJson = nlohmann::ordered_json;

OrderedJson candidate_set_json(const CandidateSet& cs);
OrderedJson bound_result_json(const BoundResult& r);
OrderedJson hypothesis_report_json(const HypothesisReport& rep);
OrderedJson certificate_json(const AlphaCertificate& c);
OrderedJson audit_entry_json(const AuditEntry& e);

// Config block with keys L2, LK, pa, degree_unit, rank1, mode.
SurfaceData surface_from_json(const OrderedJson& j);
SurfaceData load_surface(const std::string& path);

std::string render_json(const OrderedJson& j);

}  // namespace seshadri
