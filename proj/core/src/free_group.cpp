#include "vkg/free_group.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vkg {

Alphabet::Alphabet(std::vector<std::string> labels) {
  for (const auto& l : labels) {
    if (l.empty()) throw GroupError("generator label must be nonempty");
    if (l == "1") throw GroupError("generator label '1' is reserved for the identity");
    if (!std::isalpha(static_cast<unsigned char>(l.front())))
      throw GroupError("generator label must start with a letter: " + l);
    for (char c : l)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw GroupError("generator label has invalid character: " + l);
  }
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw GroupError("duplicate generator label: " + labels[i]);
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

const std::string& Alphabet::label(int id) const {
  if (!labels_ || id < 0 || id >= rank()) throw GroupError("generator id out of range");
  return (*labels_)[static_cast<std::size_t>(id)];
}

std::optional<int> Alphabet::index_of(std::string_view label) const {
  if (!labels_) return std::nullopt;
  for (std::size_t i = 0; i < labels_->size(); ++i)
    if ((*labels_)[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.labels_ == b.labels_) return true;
  if (!a.labels_ || !b.labels_) return a.rank() == 0 && b.rank() == 0;
  return *a.labels_ == *b.labels_;
}

namespace {

void push_reduced(std::vector<Syllable>& out, int gen, std::int64_t exp) {
  if (exp == 0) return;
  while (!out.empty() && out.back().gen == gen) {
    exp += out.back().exp;
    out.pop_back();
    if (exp == 0) return;
  }
  out.push_back({gen, exp});
}

void check_same_alphabet(const Word& u, const Word& v) {
  if (u.is_identity() || v.is_identity()) return;
  if (u.alphabet() != v.alphabet()) throw GroupError("alphabet mismatch");
}

}  // namespace

Word Word::reduce(Alphabet a, std::span<const Syllable> raw) {
  Word w(std::move(a));
  for (const Syllable& s : raw) {
    if (s.gen < 0 || s.gen >= w.alphabet_.rank()) throw GroupError("syllable generator out of range");
    push_reduced(w.syllables_, s.gen, s.exp);
  }
  return w;
}

Word Word::generator(Alphabet a, int id, std::int64_t exp) {
  Syllable s{id, exp};
  return reduce(std::move(a), std::span<const Syllable>(&s, 1));
}

std::int64_t Word::letter_length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

std::int64_t Word::exponent_sum(int gen) const {
  std::int64_t n = 0;
  for (const auto& s : syllables_)
    if (s.gen == gen) n += s.exp;
  return n;
}

Word Word::inverse() const {
  Word w(alphabet_);
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word operator*(const Word& u, const Word& v) {
  check_same_alphabet(u, v);
  Word w(u.is_identity() ? v.alphabet_ : u.alphabet_);
  w.syllables_ = u.syllables_;
  for (const Syllable& s : v.syllables_) push_reduced(w.syllables_, s.gen, s.exp);
  return w;
}

bool operator==(const Word& u, const Word& v) {
  if (u.syllables_ != v.syllables_) return false;
  if (u.is_identity() && v.is_identity()) return true;
  return u.alphabet_ == v.alphabet_;
}

Word Word::pow(std::int64_t k) const {
  if (k == 0) return Word(alphabet_);
  Word base = k > 0 ? *this : inverse();
  std::int64_t n = k > 0 ? k : -k;
  // Single-syllable words power by exponent alone.
  if (base.syllables_.size() == 1) {
    Word w(alphabet_);
    w.syllables_.push_back({base.syllables_[0].gen, base.syllables_[0].exp * n});
    return w;
  }
  Word acc(alphabet_);
  for (std::int64_t i = 0; i < n; ++i) acc *= base;
  return acc;
}

Word Word::conjugated_by(const Word& h) const { return h.inverse() * *this * h; }

Word Word::substituted(int gen, const Word& image, const Alphabet& target) const {
  Word out(target);
  for (const Syllable& s : syllables_) {
    if (s.gen == gen) {
      out *= image.pow(s.exp);
    } else {
      auto id = target.index_of(alphabet_.label(s.gen));
      if (!id) throw GroupError("generator " + alphabet_.label(s.gen) + " missing from target alphabet");
      out *= Word::generator(target, *id, s.exp);
    }
  }
  return out;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  while (w.syllables_.size() >= 2 && w.syllables_.front().gen == w.syllables_.back().gen) {
    Syllable first = w.syllables_.front();
    Syllable last = w.syllables_.back();
    std::int64_t merged = first.exp + last.exp;
    std::vector<Syllable> mid(w.syllables_.begin() + 1, w.syllables_.end() - 1);
    std::vector<Syllable> all;
    if (merged != 0) all.push_back({first.gen, merged});
    all.insert(all.end(), mid.begin(), mid.end());
    Word next = reduce(w.alphabet_, all);
    if (next.letter_length() >= w.letter_length()) break;
    w = next;
  }
  return w;
}

std::vector<std::pair<int, int>> Word::letters() const {
  std::vector<std::pair<int, int>> ls;
  for (const auto& s : syllables_) {
    int sign = s.exp > 0 ? 1 : -1;
    std::int64_t n = s.exp > 0 ? s.exp : -s.exp;
    for (std::int64_t i = 0; i < n; ++i) ls.emplace_back(s.gen, sign);
  }
  return ls;
}

Word Word::from_letters(Alphabet a, const std::vector<std::pair<int, int>>& ls) {
  std::vector<Syllable> raw;
  raw.reserve(ls.size());
  for (auto [g, sgn] : ls) raw.push_back({g, sgn});
  return reduce(std::move(a), raw);
}

Word Word::cyclic_normal_form() const {
  Word base = cyclically_reduced();
  if (base.is_identity()) return base;
  auto best_rotation = [&](const Word& w) {
    auto ls = w.letters();
    auto best = ls;
    for (std::size_t r = 1; r < ls.size(); ++r) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
      if (ls < best) best = ls;
    }
    return best;
  };
  auto a = best_rotation(base);
  auto b = best_rotation(base.inverse());
  return from_letters(base.alphabet_, std::min(a, b));
}

std::string Word::str() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first) os << '*';
    first = false;
    os << alphabet_.label(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

Word Word::parse(const Alphabet& a, std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '1' &&
      (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
    ++i;
    skip_ws();
    if (i == text.size()) return Word(a);
    throw GroupError("unexpected text after identity '1'");
  }
  while (i < text.size()) {
    // Longest label match at the current position.
    int gen = -1;
    std::size_t match_len = 0;
    for (int g = 0; g < a.rank(); ++g) {
      const std::string& l = a.label(g);
      if (l.size() > match_len && text.substr(i, l.size()) == l) {
        gen = g;
        match_len = l.size();
      }
    }
    if (gen < 0) throw GroupError("unknown generator at: " + std::string(text.substr(i)));
    i += match_len;
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw GroupError("expected integer exponent");
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      exp = neg ? -v : v;
    }
    raw.push_back({gen, exp});
    skip_ws();
  }
  return reduce(a, raw);
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word left_commutator(std::span<const Word> args) {
  if (args.empty()) throw GroupError("left_commutator needs at least one argument");
  Word acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

Endomorphism::Endomorphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.rank())
    throw GroupError("endomorphism image table must cover every source generator");
  for (const Word& w : images_)
    if (!w.is_identity() && w.alphabet() != target_)
      throw GroupError("endomorphism image over wrong alphabet");
}

Endomorphism Endomorphism::identity(const Alphabet& a) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(a.rank()));
  for (int g = 0; g < a.rank(); ++g) images.push_back(Word::generator(a, g));
  return Endomorphism(a, a, std::move(images));
}

const Word& Endomorphism::image(int gen) const {
  if (gen < 0 || gen >= static_cast<int>(images_.size()))
    throw GroupError("generator missing from image map");
  return images_[static_cast<std::size_t>(gen)];
}

Word Endomorphism::apply(const Word& w) const {
  if (!w.is_identity() && w.alphabet() != source_)
    throw GroupError("word is not over the endomorphism source alphabet");
  Word out(target_);
  for (const Syllable& s : w.syllables()) out *= image(s.gen).pow(s.exp);
  return out;
}

bool operator==(const Endomorphism& a, const Endomorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
}

Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
  if (e2.target() != e1.source())
    throw GroupError("compose: target alphabet of inner map must equal source of outer");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(e2.source().rank()));
  for (int g = 0; g < e2.source().rank(); ++g) images.push_back(e1.apply(e2.image(g)));
  return Endomorphism(e2.source(), e1.target(), std::move(images));
}

}  // namespace vkg
