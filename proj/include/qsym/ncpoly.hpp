#ifndef QSYM_NCPOLY_HPP
#define QSYM_NCPOLY_HPP

#include <compare>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace qsym {

using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s); // throws ParseError on junk

// The symbol q_{row,col}.
struct Generator {
  int row = 0;
  int col = 0;
  bool operator==(const Generator&) const = default;
  auto operator<=>(const Generator&) const = default;
};

// A letter packs a generator; works for up to 256 vertices.
using Letter = std::uint16_t;

inline Letter make_letter(int row, int col) {
  return static_cast<Letter>((row << 8) | col);
}
inline int letter_row(Letter l) { return l >> 8; }
inline int letter_col(Letter l) { return l & 0xff; }
inline Generator letter_generator(Letter l) { return {letter_row(l), letter_col(l)}; }

// Monomial in the generators; the empty word is the unit.
struct Word {
  std::vector<Letter> letters;

  static Word one() { return {}; }
  static Word of(Generator g) { return {{make_letter(g.row, g.col)}}; }

  int degree() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  Word reversed() const {
    return {std::vector<Letter>(letters.rbegin(), letters.rend())};
  }
  Word append(Letter l) const {
    Word w = *this;
    w.letters.push_back(l);
    return w;
  }
  Word prepend(Letter l) const {
    Word w;
    w.letters.reserve(letters.size() + 1);
    w.letters.push_back(l);
    w.letters.insert(w.letters.end(), letters.begin(), letters.end());
    return w;
  }

  bool operator==(const Word&) const = default;
};

// Graded order: degree first, then lexicographic on the letter sequence.
std::strong_ordering graded_compare(const Word& a, const Word& b);
inline bool graded_less(const Word& a, const Word& b) {
  return graded_compare(a, b) == std::strong_ordering::less;
}

struct WordHash {
  size_t operator()(const Word& w) const {
    size_t h = 1469598103934665603ull;
    for (Letter l : w.letters) {
      h ^= l;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Exact-rational linear combination of words. Terms are kept sorted in
// descending graded order (leading term first) with no zero coefficients.
class NCPoly {
public:
  NCPoly() = default;
  static NCPoly zero() { return {}; }
  static NCPoly constant(const Rat& c);
  static NCPoly word(const Word& w, const Rat& c = 1);
  static NCPoly generator(Generator g) { return word(Word::of(g)); }

  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<Word, Rat>>& terms() const { return terms_; }
  const Word& leading_word() const { return terms_.front().first; }
  const Rat& leading_coeff() const { return terms_.front().second; }

  void add_term(const Word& w, const Rat& c);
  NCPoly& operator+=(const NCPoly& other);
  NCPoly& operator-=(const NCPoly& other);
  NCPoly operator+(const NCPoly& other) const;
  NCPoly operator-(const NCPoly& other) const;
  NCPoly operator-() const;
  NCPoly scaled(const Rat& c) const;
  void scale(const Rat& c);

  // x * y in the free algebra (word concatenation).
  NCPoly mul(const NCPoly& other) const;
  NCPoly mul_left_letter(Letter l) const;
  NCPoly mul_right_letter(Letter l) const;

  // Involution: generators are self-adjoint, words reverse.
  NCPoly reversed() const;

  // Divides by the leading coefficient, making it +1. No-op on zero.
  void make_monic();

  bool operator==(const NCPoly&) const = default;
  // Total order for deterministic relation sorting.
  static std::strong_ordering compare(const NCPoly& a, const NCPoly& b);

private:
  std::vector<std::pair<Word, Rat>> terms_;
  void normalize_sorted(); // restore invariants after bulk edits
};

} // namespace qsym

#endif
