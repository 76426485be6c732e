#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "essv/constructions.hpp"
#include "essv/decide.hpp"
#include "essv/dfa.hpp"
#include "essv/monoid.hpp"
#include "essv/stamp.hpp"

namespace essv::io {

using nlohmann::json;

/// {"size": n, "identity": i, "table": [[...]], "names": [...]?}
json to_json(const Monoid& m);
Monoid monoid_from_json(const json& j);

/// {"alphabet": [...], "states": n, "initial": i, "finals": [...],
///  "delta": [[...]]}. Missing transitions (null or -1) go to an added
/// rejecting sink.
json to_json(const Dfa& d);
Dfa dfa_from_json(const json& j);

/// {"alphabet": [...], "monoid": {...}, "letters": {"a": i}, "accepting": [...]?}
json to_json(const Stamp& s);
Stamp stamp_from_json(const json& j);

/// {"alphabet": [...], "monomials": [{"sets": [["b"], ["a","b"]], "letters": ["a"]}], "mode": "R"}
struct MonomialFile {
  Alphabet alphabet;
  std::vector<RMonomial> monomials;
};
json to_json(const MonomialFile& f);
MonomialFile monomials_from_json(const json& j);

json to_json(const EssentialQuotient& q);
json to_json(const IdentityViolation& v, const Monoid& m);

/// {"language": <canonical dfa>, "variety": ..., "in_join": ..., "method": ...,
///  "quotient_size": n, "stability_index": s, "witness": {...}?}
json verdict_to_json(const JoinVerdict& v, const Dfa& language);

json to_json(const J1Report& r);

/// Reads and parses a JSON file; throws InputError with the path on failure.
json read_file(const std::string& path);

}  // namespace essv::io
