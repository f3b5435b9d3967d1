#pragma once

#include "ordbraid/cluster.hpp"
#include "ordbraid/dehornoy.hpp"
#include "ordbraid/experiment.hpp"
#include "ordbraid/garside.hpp"
#include "ordbraid/link.hpp"

#include <json.hpp>

namespace ordbraid::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json sign_json(const BraidWord &b, const DehornoySign &s);
Json compare_json(const BraidWord &a, const BraidWord &b, Relation r);
Json normal_form_json(const BraidWord &b);
Json invariant_json(const BraidWord &b, const InvariantValue &v);
Json seed_json(std::string_view surface, const MutationTrace &trace);
Json audit_json(std::string_view surface, const AuditReport &r);
Json experiment_json(const ExperimentReport &r);

} // namespace ordbraid::cli
