#include "metabel/protocols.hpp"

#include <string>

#include "metabel/error.hpp"

namespace metabel {

namespace {

std::vector<Factor> random_factorization(std::size_t length, std::size_t tuple_size, Rng& rng) {
  std::vector<Factor> factors;
  factors.reserve(length);
  for (std::size_t j = 0; j < length; ++j) {
    const auto index = static_cast<std::size_t>(uniform_below(rng, tuple_size));
    const int sign = uniform_below(rng, 2) == 0 ? 1 : -1;
    factors.push_back({index, sign});
  }
  return factors;
}

template <typename MakeElement>
AagInstance aag_generate_with(const GroupParams& params, const AagShape& shape, Rng& rng, MakeElement make) {
  if (shape.n1 == 0 || shape.n2 == 0 || shape.l == 0 || shape.m == 0) {
    throw Error(ErrorCode::MalformedInput, "n1, n2, l, m must all be positive");
  }
  for (;;) {
    std::vector<GroupElement> a_tuple;
    std::vector<GroupElement> b_tuple;
    for (std::size_t i = 0; i < shape.n1; ++i) a_tuple.push_back(make());
    for (std::size_t i = 0; i < shape.n2; ++i) b_tuple.push_back(make());
    auto A_fact = random_factorization(shape.l, shape.n1, rng);
    auto B_fact = random_factorization(shape.m, shape.n2, rng);
    AagInstance inst =
        aag_assemble(params, std::move(a_tuple), std::move(b_tuple), std::move(A_fact), std::move(B_fact));
    if (!inst.secret.A.is_identity() && !inst.secret.B.is_identity()) return inst;
  }
}

}  // namespace

GroupElement apply_factorization(const GroupParams& params, const std::vector<GroupElement>& tuple,
                                 const std::vector<Factor>& factors) {
  GroupElement acc = params.identity();
  for (const auto& f : factors) {
    const GroupElement& x = tuple.at(f.index);
    acc = mul(params, acc, f.sign > 0 ? x : inv(params, x));
  }
  return acc;
}

AagInstance aag_assemble(const GroupParams& params, std::vector<GroupElement> a_tuple,
                         std::vector<GroupElement> b_tuple, std::vector<Factor> A_factorization,
                         std::vector<Factor> B_factorization) {
  AagInstance inst{AagPublic{params, std::move(a_tuple), std::move(b_tuple), {}, {}},
                   AagSecret{std::move(A_factorization), std::move(B_factorization), {}, {}, {}}};
  auto& pub = inst.pub;
  auto& sec = inst.secret;
  sec.A = apply_factorization(params, pub.a_tuple, sec.A_factorization);
  sec.B = apply_factorization(params, pub.b_tuple, sec.B_factorization);
  for (const auto& b : pub.b_tuple) pub.conj_b_by_A.push_back(conj(params, b, sec.A));
  for (const auto& a : pub.a_tuple) pub.conj_a_by_B.push_back(conj(params, a, sec.B));
  sec.true_key = commutator(params, sec.A, sec.B);
  return inst;
}

AagInstance aag_generate(const GroupParams& params, const AagShape& shape, Rng& rng) {
  if (shape.word_len == 0) throw Error(ErrorCode::MalformedInput, "word length must be positive");
  return aag_generate_with(params, shape, rng,
                           [&] { return evaluate(params, random_word(params, shape.word_len, rng)); });
}

AagInstance aag_generate_from_elements(const GroupParams& params, const AagShape& shape, long exp_bound,
                                       const Integer& num_bound, Rng& rng) {
  if (exp_bound < 1 && num_bound < 1) throw Error(ErrorCode::MalformedInput, "sampling bounds are all zero");
  return aag_generate_with(params, shape, rng,
                           [&] { return random_element(params, exp_bound, num_bound, rng); });
}

GroupElement aag_alice_key(const AagInstance& instance) {
  const auto& params = instance.pub.params;
  const GroupElement conjugated = apply_factorization(params, instance.pub.conj_a_by_B, instance.secret.A_factorization);
  return mul(params, inv(params, instance.secret.A), conjugated);
}

GroupElement aag_bob_key(const AagInstance& instance) {
  const auto& params = instance.pub.params;
  const GroupElement conjugated = apply_factorization(params, instance.pub.conj_b_by_A, instance.secret.B_factorization);
  return mul(params, inv(params, conjugated), instance.secret.B);
}

std::string_view to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::SubM: return "m";
    case SubgroupKind::SubN: return "n";
    case SubgroupKind::ConjM: return "conj";
  }
  return "?";
}

SubgroupKind parse_subgroup_kind(std::string_view text) {
  if (text == "m") return SubgroupKind::SubM;
  if (text == "n") return SubgroupKind::SubN;
  if (text == "conj") return SubgroupKind::ConjM;
  throw Error(ErrorCode::MalformedInput, "unknown subgroup case '" + std::string(text) + "'");
}

GroupElement conj_m_element(const GroupParams& params, const Rational& r, const MPart& alpha) {
  return {alpha, r * (Rational(1) - params.chi(alpha))};
}

bool in_subgroup(const GroupParams& params, const SubgroupDescriptor& omega, const GroupElement& x) {
  switch (omega.kind) {
    case SubgroupKind::SubM: return x.n_part.is_zero();
    case SubgroupKind::SubN: return x.m_part.is_zero();
    case SubgroupKind::ConjM: return x.n_part == omega.r * (Rational(1) - params.chi(x.m_part));
  }
  return false;
}

KoLeeInstance kolee_assemble(const GroupParams& params, GroupElement g, SubgroupDescriptor descriptor,
                             GroupElement a, GroupElement b) {
  KoLeeInstance inst{KoLeePublic{params, std::move(g), std::move(descriptor), {}, {}},
                     KoLeeSecret{std::move(a), std::move(b), {}}};
  inst.pub.g_a = conj(params, inst.pub.g, inst.secret.a);
  inst.pub.g_b = conj(params, inst.pub.g, inst.secret.b);
  inst.secret.true_key = kolee_shared_key(inst);
  return inst;
}

KoLeeInstance kolee_generate(const GroupParams& params, SubgroupKind kind, const KoLeeBounds& bounds, Rng& rng) {
  if (bounds.exp_bound < 1 || bounds.num_bound < 1) {
    throw Error(ErrorCode::MalformedInput, "Ko-Lee sampling bounds must be positive");
  }
  const Rational one(1);
  auto nonzero_n_value = [&] {
    Rational v;
    do {
      v = random_n_value(params, bounds.exp_bound, bounds.num_bound, rng);
    } while (v.is_zero());
    return v;
  };
  // For ConjM, r is fixed first so g can avoid M^r itself: a g inside M^r
  // commutes with every secret and publishes nothing about it.
  const Rational r = kind == SubgroupKind::ConjM ? nonzero_n_value() : Rational(0);
  GroupElement g;
  for (;;) {
    g = random_element(params, bounds.exp_bound, bounds.num_bound, rng);
    if (g.n_part.is_zero() || params.chi(g.m_part) == one) continue;
    if (kind == SubgroupKind::ConjM && in_subgroup(params, SubgroupDescriptor::conj_m(r), g)) continue;
    break;
  }

  auto nontrivial_mpart = [&] {
    MPart alpha;
    do {
      alpha = random_mpart(params, bounds.exp_bound, rng);
    } while (params.chi(alpha) == one);
    return alpha;
  };
  switch (kind) {
    case SubgroupKind::SubM: {
      GroupElement a{nontrivial_mpart(), Rational(0)};
      GroupElement b{nontrivial_mpart(), Rational(0)};
      return kolee_assemble(params, std::move(g), SubgroupDescriptor::sub_m(), std::move(a), std::move(b));
    }
    case SubgroupKind::SubN: {
      GroupElement a{MPart::zero(params.n()), nonzero_n_value()};
      GroupElement b{MPart::zero(params.n()), nonzero_n_value()};
      return kolee_assemble(params, std::move(g), SubgroupDescriptor::sub_n(), std::move(a), std::move(b));
    }
    case SubgroupKind::ConjM: {
      GroupElement a = conj_m_element(params, r, nontrivial_mpart());
      GroupElement b = conj_m_element(params, r, nontrivial_mpart());
      return kolee_assemble(params, std::move(g), SubgroupDescriptor::conj_m(r), std::move(a),
                            std::move(b));
    }
  }
  throw Error(ErrorCode::MalformedInput, "unknown subgroup kind");
}

GroupElement kolee_shared_key(const KoLeeInstance& instance) {
  const auto& params = instance.pub.params;
  GroupElement alice = conj(params, instance.pub.g_b, instance.secret.a);
  const GroupElement bob = conj(params, instance.pub.g_a, instance.secret.b);
  if (alice != bob) {
    throw Error(ErrorCode::CommutationViolation, "(g^b)^a != (g^a)^b; secrets do not commute");
  }
  return alice;
}

}  // namespace metabel
