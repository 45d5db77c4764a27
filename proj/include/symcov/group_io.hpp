#pragma once

#include <string>
#include <vector>

#include "symcov/group.hpp"

namespace symcov {

/// Group-spec JSON:
///   { "degree": n,
///     "generators": [ [[cycle], [cycle], ...], ... ],
///     "name": optional string }
/// with cycles as arrays of 0-based points; fixed points omitted.
PermutationGroup group_from_json(const std::string& text);
PermutationGroup group_from_json_file(const std::string& path);
std::string group_to_json(const PermutationGroup& group);

Permutation permutation_from_cycles_json(int degree, const std::string& text);

}  // namespace symcov
