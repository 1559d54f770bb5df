#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vkg {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ordered alphabet of named free-group generators. Generator ids are the
/// positions in the label list. Alphabets are cheap to copy (shared storage),
/// so distinct ranks (F_n and F_{n+1}) coexist without global state.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  int rank() const { return labels_ ? static_cast<int>(labels_->size()) : 0; }
  const std::string& label(int id) const;
  std::optional<int> index_of(std::string_view label) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

struct Syllable {
  int gen = 0;
  std::int64_t exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A freely reduced word: adjacent syllables carry distinct generators and no
/// exponent is zero. Run-length form keeps x^r cheap for large r.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet a) : alphabet_(std::move(a)) {}

  /// Free reduction of an arbitrary syllable sequence; idempotent.
  static Word reduce(Alphabet a, std::span<const Syllable> raw);
  static Word generator(Alphabet a, int id, std::int64_t exp = 1);

  /// Parses the shared word grammar: `x^-2*y*x1^3`, `*` optional, `^1`
  /// optional, `1` (or empty) for the identity. Longest-match on labels.
  static Word parse(const Alphabet& a, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  bool is_identity() const { return syllables_.empty(); }
  std::span<const Syllable> syllables() const { return syllables_; }
  std::size_t syllable_count() const { return syllables_.size(); }
  std::int64_t letter_length() const;
  std::int64_t exponent_sum(int gen) const;

  Word inverse() const;
  Word pow(std::int64_t k) const;
  /// h^-1 * this * h
  Word conjugated_by(const Word& h) const;
  /// Every occurrence of generator `gen` replaced by `image` (which may be
  /// over a different alphabet); the result is reduced.
  Word substituted(int gen, const Word& image, const Alphabet& target) const;
  /// Cyclically reduced form (conjugacy class representative up to rotation).
  Word cyclically_reduced() const;
  /// Canonical representative of the cyclic class of {w, w^-1}: the
  /// lexicographically least rotation by letters.
  Word cyclic_normal_form() const;

  std::string str() const;

  friend Word operator*(const Word& u, const Word& v);
  Word& operator*=(const Word& v) { return *this = *this * v; }
  friend bool operator==(const Word& u, const Word& v);
  friend bool operator!=(const Word& u, const Word& v) { return !(u == v); }

 private:
  std::vector<std::pair<int, int>> letters() const;  // (gen, +-1) expansion
  static Word from_letters(Alphabet a, const std::vector<std::pair<int, int>>& ls);

  Alphabet alphabet_;
  std::vector<Syllable> syllables_;
};

Word commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b
/// Left-normed iterate [a1, a2, ..., ak] = [[a1,a2],...,ak].
Word left_commutator(std::span<const Word> args);

/// A map of generators to images, applied homomorphically. Totality of the
/// image table is enforced at construction.
class Endomorphism {
 public:
  Endomorphism(Alphabet source, Alphabet target, std::vector<Word> images);
  static Endomorphism identity(const Alphabet& a);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(int gen) const;

  Word apply(const Word& w) const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b);
  friend bool operator!=(const Endomorphism& a, const Endomorphism& b) { return !(a == b); }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

/// compose(e1, e2)(g) = e1(e2(g)); requires target(e2) == source(e1).
Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2);

}  // namespace vkg
