#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "hecke/enumeration.hpp"
#include "hecke/forms.hpp"
#include "hecke/membership.hpp"
#include "hecke/moebius.hpp"
#include "hecke/reduction.hpp"
#include "hecke/ring.hpp"

// Text grammars (documented in FORMATS.md):
//   RingInt    integer polynomial in L, e.g. "1", "-2+L", "1+2L-L^2"
//   RingRat    "num" or "(num)/den" with den > 1; "inf" for the projective point
//   matrix     [[a,b],[c,d]]          form   [A;B;C;s] with s in {+,-}

namespace hecke {

std::string to_text(const RingInt& a);
std::string to_text(const RingRat& a);
std::string to_text(const ProjPoint& p);
std::string to_text(const ProjMatrix& m);
std::string to_text(const ProjForm& f);

RingInt parse_ring_int(const ContextPtr& ctx, std::string_view text);
RingRat parse_ring_rat(const ContextPtr& ctx, std::string_view text);
ProjPoint parse_proj_point(const ContextPtr& ctx, std::string_view text);
ProjMatrix parse_matrix(const ContextPtr& ctx, std::string_view text);
ProjForm parse_form(const ContextPtr& ctx, std::string_view text);

nlohmann::ordered_json to_json(const ProjMatrix& m);
nlohmann::ordered_json to_json(const ProjForm& f);
nlohmann::ordered_json to_json(const ReductionResult& r);
nlohmann::ordered_json to_json(const DecisionResult& r);
nlohmann::ordered_json to_json(const EnumerationReport& r);

ProjMatrix matrix_from_json(const ContextPtr& ctx, const nlohmann::json& j);
ProjForm form_from_json(const ContextPtr& ctx, const nlohmann::json& j);

} // namespace hecke
