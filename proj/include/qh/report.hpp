#pragma once

#include <string>

#include "qh/check.hpp"
#include "qh/quiver.hpp"

namespace qh {

std::string tool_version();

// SHA-256 of the canonical quiver JSON, lowercase hex.
std::string quiver_hash(const Quiver &q);

// Report envelope: tool, version, command, quiver hash, verdict, body.
Json make_report(const std::string &command, const Quiver *q, bool ok, Json result);

// Flattens an array of objects into CSV, columns in first-seen key order.
std::string to_csv(const Json &rows);

} // namespace qh
