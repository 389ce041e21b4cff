#pragma once

#include <string>

#include "voa/spec.hpp"

namespace voa {

/// Parses and validates a spec from its JSON form. Throws SpecError with
/// the violated invariant on bad input.
VoaSpec load_spec(const std::string& text);

/// Canonical JSON form: fixed key order, symmetric orbits listed once
/// (sorted representatives, zero entries omitted). save/load round-trips.
std::string save_spec(const VoaSpec& spec);

/// FNV-1a hash of the canonical JSON form; keys the persistent cache.
std::uint64_t spec_content_hash(const VoaSpec& spec);

}  // namespace voa
