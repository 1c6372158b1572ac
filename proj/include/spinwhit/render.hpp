#pragma once

#include "spinwhit/whittaker.hpp"

#include <json.hpp>

#include <string>

namespace spinwhit {

using Json = nlohmann::ordered_json;

Json weight_json(const SpinWeight& w);
Json diagram_json(const SocleDiagram& d);
Json trace_json(const DerivationTrace& t);

/// One envelope per command invocation; schema_version bumps on any payload
/// change.
Json envelope(const std::string& command, Json input, Json result,
              const std::vector<std::string>& warnings);

/// digraph with plain node and edge statements, upper label pointing at the
/// one below it.
std::string diagram_dot(const SocleDiagram& d);

/// Serialized with two-space indentation and a trailing newline; parsing and
/// re-serializing a diagram is byte-identical.
std::string dump_json(const Json& j);

}  // namespace spinwhit
