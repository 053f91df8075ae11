#include "metabel/json_io.hpp"

#include <string>

#include "metabel/error.hpp"

namespace metabel {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j) {
  if (!j.is_string()) malformed("expected a string, got " + j.dump());
  return j.get<std::string>();
}

Integer integer_from_json(const Json& j) { return parse_integer(string_field(j)); }

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("field '") + key + "' must be an array");
  return a;
}

Json elements_to_json(const std::vector<GroupElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

std::vector<GroupElement> elements_from_json(const Json& j, const char* key, const GroupParams& params) {
  std::vector<GroupElement> out;
  for (const auto& x : array_field(j, key)) out.push_back(element_from_json(x, params));
  return out;
}

Json factors_to_json(const std::vector<Factor>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(Json{{"index", f.index}, {"sign", f.sign}});
  return out;
}

std::vector<Factor> factors_from_json(const Json& j, const char* key, std::size_t tuple_size) {
  std::vector<Factor> out;
  for (const auto& f : array_field(j, key)) {
    const Json& index = field(f, "index");
    const Json& sign = field(f, "sign");
    if (!index.is_number_unsigned() || !sign.is_number_integer()) malformed("factor fields must be integers");
    Factor factor{index.get<std::size_t>(), sign.get<int>()};
    if (factor.index >= tuple_size) malformed("factor index out of range");
    if (factor.sign != 1 && factor.sign != -1) malformed("factor sign must be +1 or -1");
    out.push_back(factor);
  }
  return out;
}

}  // namespace

Json to_json(const Rational& x) { return Json{{"num", x.num().get_str()}, {"den", x.den().get_str()}}; }

Rational rational_from_json(const Json& j) {
  return Rational(integer_from_json(field(j, "num")), integer_from_json(field(j, "den")));
}

Json to_json(const GroupParams& params) {
  Json moduli = Json::array();
  for (const auto m : params.moduli()) moduli.push_back(std::to_string(m));
  return Json{{"moduli", moduli}};
}

GroupParams params_from_json(const Json& j) {
  std::vector<Integer> moduli;
  for (const auto& m : array_field(j, "moduli")) moduli.push_back(integer_from_json(m));
  return GroupParams::from_integers(moduli);
}

Json to_json(const GroupElement& x) {
  Json alpha = Json::array();
  for (const auto& a : x.m_part.alpha) alpha.push_back(a.get_str());
  return Json{{"alpha", alpha}, {"d", to_json(x.n_part)}};
}

GroupElement element_from_json(const Json& j, const GroupParams& params) {
  GroupElement x;
  for (const auto& a : array_field(j, "alpha")) x.m_part.alpha.push_back(integer_from_json(a));
  x.n_part = rational_from_json(field(j, "d"));
  params.validate(x);
  return x;
}

Json to_json(const SubgroupDescriptor& omega) {
  Json out{{"kind", std::string(to_string(omega.kind))}};
  if (omega.kind == SubgroupKind::ConjM) out["r"] = to_json(omega.r);
  return out;
}

SubgroupDescriptor descriptor_from_json(const Json& j) {
  const SubgroupKind kind = parse_subgroup_kind(string_field(field(j, "kind")));
  if (kind == SubgroupKind::ConjM) return SubgroupDescriptor::conj_m(rational_from_json(field(j, "r")));
  return {kind, Rational(0)};
}

Json to_json(const AagPublic& pub) {
  return Json{{"params", to_json(pub.params)},
              {"a_tuple", elements_to_json(pub.a_tuple)},
              {"b_tuple", elements_to_json(pub.b_tuple)},
              {"conj_b_by_A", elements_to_json(pub.conj_b_by_A)},
              {"conj_a_by_B", elements_to_json(pub.conj_a_by_B)}};
}

Json to_json(const AagSecret& secret) {
  return Json{{"A_factorization", factors_to_json(secret.A_factorization)},
              {"B_factorization", factors_to_json(secret.B_factorization)},
              {"A", to_json(secret.A)},
              {"B", to_json(secret.B)},
              {"true_key", to_json(secret.true_key)}};
}

Json to_json(const KoLeePublic& pub) {
  return Json{{"params", to_json(pub.params)},
              {"g", to_json(pub.g)},
              {"descriptor", to_json(pub.descriptor)},
              {"g_a", to_json(pub.g_a)},
              {"g_b", to_json(pub.g_b)}};
}

Json to_json(const KoLeeSecret& secret) {
  return Json{{"a", to_json(secret.a)}, {"b", to_json(secret.b)}, {"true_key", to_json(secret.true_key)}};
}

Json to_json(const AagInstance& instance) {
  return Json{{"protocol", "aag"}, {"public", to_json(instance.pub)}, {"secret", to_json(instance.secret)}};
}

Json to_json(const KoLeeInstance& instance) {
  return Json{{"protocol", "kolee"}, {"public", to_json(instance.pub)}, {"secret", to_json(instance.secret)}};
}

LoadedInstance instance_from_json(const Json& j) {
  const std::string protocol = string_field(field(j, "protocol"));
  const Json& pub_json = field(j, "public");
  const auto secret_it = j.find("secret");
  const bool has_secret = secret_it != j.end() && !secret_it->is_null();

  if (protocol == "aag") {
    GroupParams params = params_from_json(field(pub_json, "params"));
    LoadedAag out{AagPublic{params, elements_from_json(pub_json, "a_tuple", params),
                            elements_from_json(pub_json, "b_tuple", params),
                            elements_from_json(pub_json, "conj_b_by_A", params),
                            elements_from_json(pub_json, "conj_a_by_B", params)},
                  std::nullopt};
    if (out.pub.a_tuple.empty() || out.pub.b_tuple.empty()) malformed("public tuples must be nonempty");
    if (out.pub.a_tuple.size() != out.pub.conj_a_by_B.size() || out.pub.b_tuple.size() != out.pub.conj_b_by_A.size()) {
      malformed("conjugate tuples must match the public tuples in length");
    }
    if (has_secret) {
      const Json& s = *secret_it;
      out.secret = AagSecret{factors_from_json(s, "A_factorization", out.pub.a_tuple.size()),
                             factors_from_json(s, "B_factorization", out.pub.b_tuple.size()),
                             element_from_json(field(s, "A"), params), element_from_json(field(s, "B"), params),
                             element_from_json(field(s, "true_key"), params)};
    }
    return out;
  }
  if (protocol == "kolee") {
    GroupParams params = params_from_json(field(pub_json, "params"));
    LoadedKoLee out{KoLeePublic{params, element_from_json(field(pub_json, "g"), params),
                                descriptor_from_json(field(pub_json, "descriptor")),
                                element_from_json(field(pub_json, "g_a"), params),
                                element_from_json(field(pub_json, "g_b"), params)},
                    std::nullopt};
    if (has_secret) {
      const Json& s = *secret_it;
      out.secret = KoLeeSecret{element_from_json(field(s, "a"), params), element_from_json(field(s, "b"), params),
                               element_from_json(field(s, "true_key"), params)};
    }
    return out;
  }
  malformed("unknown protocol '" + protocol + "'");
}

Json to_json(const ScspSolution& sol) {
  Json alpha = Json::array();
  for (const auto& a : sol.alpha.alpha) alpha.push_back(a.get_str());
  return Json{{"status", std::string(to_string(sol.status))},
              {"t", to_json(sol.t)},
              {"d", to_json(sol.d)},
              {"alpha", alpha}};
}

}  // namespace metabel
