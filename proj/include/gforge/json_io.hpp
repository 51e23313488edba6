#pragma once

#include <json.hpp>

#include "gforge/groupoid.hpp"
#include "gforge/oracle.hpp"

namespace gforge {

nlohmann::json generator_to_json(const Generator& g);
nlohmann::json open_to_json(const Open& o);  // array of arrays of generator references
nlohmann::json presentation_to_json(const FramePresentation& p);
nlohmann::json groupoid_to_json(const GroupoidPresentation& g);
nlohmann::json model_to_json(const IndexedModel& m);
nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace gforge
