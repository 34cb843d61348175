#ifndef TAILSUM_SPEC_IO_HPP
#define TAILSUM_SPEC_IO_HPP

#include <string>

#include <json.hpp>

#include "tailsum/sequence.hpp"

namespace tailsum {

// Parses a sequence spec:
//   {"variables": [{"type": "atomic", "atoms": [[v, p], ...]}
//                  | {"type": "family", "family": "...", "params": [...],
//                     "eps_mass": m, "eps_value": v}
//                  | {"type": "iid-block", "count": n, "inner": {...}}],
//    "flags": {"positive": b, "symmetric": b, "iid": b},
//    "levy_constants": [c1, c2]}            // optional override
// Declared flags are re-validated against the expanded atoms; a mismatch is
// an error (flag_mismatch_error), not a warning.
IndependentSequence parse_sequence(const nlohmann::ordered_json& doc);
IndependentSequence parse_sequence_file(const std::string& path);

// Canonical expanded form (atomic variables only); parse(serialize(seq))
// reproduces seq exactly.
nlohmann::ordered_json serialize_sequence(const IndependentSequence& seq);

}  // namespace tailsum

#endif
