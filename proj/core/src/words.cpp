#include "metabel/words.hpp"

#include <cctype>

#include "metabel/error.hpp"

namespace metabel {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class WordParser {
 public:
  WordParser(std::string_view text, const GroupParams& params) : text_(text), params_(params) {}

  Word run() {
    Word word;
    skip_spaces();
    while (pos_ < text_.size()) {
      word.push_back(letter());
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ' ') fail("expected space between letters");
      skip_spaces();
    }
    return word;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::SyntaxError, message + " at offset " + std::to_string(pos_));
  }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  Letter letter() {
    Letter out;
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == 'b') {
      ++pos_;
      out.generator = 0;
    } else if (c == 'q') {
      ++pos_;
      if (pos_ == text_.size() || !is_digit(text_[pos_]) || text_[pos_] == '0') {
        fail("expected a positive generator index after 'q'");
      }
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      const Integer index(std::string(text_.substr(digits, pos_ - digits)));
      if (index > Integer(static_cast<unsigned long>(params_.n()))) {
        throw Error(ErrorCode::IndexOutOfRange, "generator q" + index.get_str() + " at offset " +
                                                    std::to_string(start) + " but n = " +
                                                    std::to_string(params_.n()));
      }
      out.generator = index.get_ui();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    out.exponent = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t sign_pos = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      if (digits == pos_) fail("expected an integer exponent after '^'");
      out.exponent = Integer(std::string(text_.substr(sign_pos, pos_ - sign_pos)));
      if (out.exponent == 0) {
        throw Error(ErrorCode::ZeroExponent, "zero exponent at offset " + std::to_string(start));
      }
    }
    return out;
  }

  std::string_view text_;
  const GroupParams& params_;
  std::size_t pos_ = 0;
};

GroupElement letter_element(const GroupParams& params, const Letter& letter) {
  GroupElement g = params.identity();
  if (letter.is_b()) {
    g.n_part = Rational(letter.exponent);
  } else {
    g.m_part.alpha[letter.generator - 1] = letter.exponent;
  }
  return g;
}

}  // namespace

Word parse_word(std::string_view text, const GroupParams& params) { return WordParser(text, params).run(); }

GroupElement evaluate(const GroupParams& params, const Word& word) {
  GroupElement acc = params.identity();
  for (const auto& letter : word) acc = mul(params, acc, letter_element(params, letter));
  return acc;
}

unsigned long normal_form_shift(const GroupParams& params, const Rational& d) {
  // den(d) only has primes from the support, so this terminates.
  const Integer& base = params.modulus_product();
  Integer den = d.den();
  unsigned long k = 0;
  Integer power = 1;
  while (power % den != 0) {
    power *= base;
    ++k;
  }
  return k;
}

Word normal_form(const GroupParams& params, const GroupElement& g) {
  const unsigned long k = normal_form_shift(params, g.n_part);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), params.modulus_product().get_mpz_t(), k);
  const Rational w = g.n_part * Rational(scale);

  Word word;
  for (std::size_t i = 0; i < params.n(); ++i) {
    Integer e = g.m_part.alpha[i] + static_cast<unsigned long>(k);
    if (e != 0) word.push_back({i + 1, std::move(e)});
  }
  if (!w.is_zero()) word.push_back({0, w.num()});
  if (k > 0) {
    for (std::size_t i = 0; i < params.n(); ++i) {
      word.push_back({i + 1, -Integer(static_cast<unsigned long>(k))});
    }
  }
  return word;
}

std::string to_string(const Word& word) {
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += ' ';
    out += letter.is_b() ? "b" : "q" + std::to_string(letter.generator);
    if (letter.exponent != 1) out += "^" + letter.exponent.get_str();
  }
  return out;
}

std::string serialize(const GroupParams& params, const GroupElement& g) {
  return to_string(normal_form(params, g));
}

Word random_word(const GroupParams& params, std::size_t length, Rng& rng) {
  static constexpr long kExponents[] = {-3, -2, -1, 1, 2, 3};
  Word word;
  word.reserve(length);
  for (std::size_t j = 0; j < length; ++j) {
    const auto generator = static_cast<std::size_t>(uniform_below(rng, params.n() + 1));
    const long e = kExponents[uniform_below(rng, 6)];
    word.push_back({generator, Integer(e)});
  }
  return word;
}

}  // namespace metabel
