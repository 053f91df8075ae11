#ifndef METABEL_WORDS_HPP
#define METABEL_WORDS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "metabel/group.hpp"

namespace metabel {

/// One generator raised to a nonzero power. generator == 0 denotes b;
/// generator == i (1 <= i <= n) denotes q_i.
struct Letter {
  std::size_t generator = 0;
  Integer exponent;

  bool is_b() const { return generator == 0; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses whitespace-separated letters of the form  b, b^k, qi, qi^k.
///
/// No simplification is done: the result mirrors the input token by token.
/// Errors: SyntaxError (message carries the byte offset), IndexOutOfRange
/// for q-indices above n, ZeroExponent for ^0.
Word parse_word(std::string_view text, const GroupParams& params);

/// Collection: folds the letters left to right under mul.
GroupElement evaluate(const GroupParams& params, const Word& word);

/// Canonical word  q1^{a1+k}..qn^{an+k} b^w q1^{-k}..qn^{-k}  where k >= 0 is
/// minimal with d (prod m_i)^k integral and w = d (prod m_i)^k. Letters with
/// zero exponent are dropped.
Word normal_form(const GroupParams& params, const GroupElement& g);

/// The k used by normal_form.
unsigned long normal_form_shift(const GroupParams& params, const Rational& d);

std::string to_string(const Word& word);

/// to_string(normal_form(params, g)).
std::string serialize(const GroupParams& params, const GroupElement& g);

/// `length` letters; generator uniform over {q1..qn, b}, exponent uniform
/// over {-3, -2, -1, 1, 2, 3}.
Word random_word(const GroupParams& params, std::size_t length, Rng& rng);

}  // namespace metabel

#endif  // METABEL_WORDS_HPP
