#pragma once

#include "rootdata.hpp"

#include <string>
#include <vector>

namespace qcover {

// Names of the built-in quiver data, in a fixed order.
const std::vector<std::string>& builtin_names();

// The quiver description for a built-in name; throws BadInput for unknown
// names.
QuiverDatum builtin_quiver(const std::string& name);

// Convenience wrapper: derive the orbit data of a built-in quiver.
RootDatum builtin_datum(const std::string& name);

// Deliberately invalid inputs used by negative tests: a datum whose odd orbit
// is overridden to even parity, and one whose off-diagonal entry at an odd
// node is odd.
QuiverDatum parity_mismatch_quiver();
QuiverDatum odd_entry_quiver();

} // namespace qcover
