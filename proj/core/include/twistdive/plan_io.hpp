#pragma once

#include <string>

#include "twistdive/plan.hpp"

namespace twistdive {

// On-disk form of a planned dive: the request, the derived dimensionless
// parameters, the solved schedule, and the feasibility verdict. Serialization
// is deterministic (fixed key order, shortest round-trip numbers), so equal
// documents produce byte-identical JSON.
struct PlanDocument {
    int schema_version = 1;
    DiveRequest request;
    DivePlan plan;
};

PlanDocument make_plan_document(const DiveRequest& req, const DivePlan& plan);

std::string plan_document_to_json(const PlanDocument& doc);

// Throws std::invalid_argument on malformed or unsupported input.
PlanDocument plan_document_from_json(const std::string& text);

}  // namespace twistdive
