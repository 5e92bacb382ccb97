#pragma once

// JSON and text renderings of certificates and reports.  The JSON layout is
// documented in docs/report-schema.md.

#include <string>

#include "json.hpp"

#include "justfp/certify.hpp"

namespace justfp {

inline constexpr char const* kReportSchema = "justfp.report/1";

nlohmann::json to_json(AbelianInvariants const& inv);
nlohmann::json to_json(Presentation const& p, Certificate const& c);
nlohmann::json to_json(IrredundancyEntry const& e, Presentation const& p);
nlohmann::json to_json(TransformRecord const& t);
nlohmann::json to_json(JustFiniteReport const& report);

std::string describe(Presentation const& p, Certificate const& c);
std::string render_text(JustFiniteReport const& report);

}  // namespace justfp
