#ifndef METABEL_JSON_IO_HPP
#define METABEL_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <variant>

#include "metabel/attacks.hpp"
#include "metabel/group.hpp"
#include "metabel/protocols.hpp"

namespace metabel {

// Field order is insertion order so emitted files diff cleanly.
using Json = nlohmann::ordered_json;

// Integers are decimal strings; rationals are {"num": "...", "den": "..."}.
// All readers throw Error(MalformedInput) on structural problems and
// Error(InvalidElement) when an element does not belong to the group.

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const GroupParams& params);
GroupParams params_from_json(const Json& j);

Json to_json(const GroupElement& x);
GroupElement element_from_json(const Json& j, const GroupParams& params);

Json to_json(const SubgroupDescriptor& omega);
SubgroupDescriptor descriptor_from_json(const Json& j);

Json to_json(const AagPublic& pub);
Json to_json(const AagSecret& secret);
Json to_json(const KoLeePublic& pub);
Json to_json(const KoLeeSecret& secret);

/// {"protocol": ..., "public": {...}, "secret": {...}}.
Json to_json(const AagInstance& instance);
Json to_json(const KoLeeInstance& instance);

struct LoadedAag {
  AagPublic pub;
  std::optional<AagSecret> secret;
};

struct LoadedKoLee {
  KoLeePublic pub;
  std::optional<KoLeeSecret> secret;
};

using LoadedInstance = std::variant<LoadedAag, LoadedKoLee>;

/// Reads an instance file; the "secret" section is optional.
LoadedInstance instance_from_json(const Json& j);

Json to_json(const ScspSolution& sol);

}  // namespace metabel

#endif  // METABEL_JSON_IO_HPP
