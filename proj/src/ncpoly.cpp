#include "qsym/ncpoly.hpp"

#include <algorithm>

#include "qsym/errors.hpp"

namespace qsym {

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("coeff", "empty rational");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw ParseError("coeff", "bad rational '" + s + "'");
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("coeff", "bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

std::strong_ordering graded_compare(const Word& a, const Word& b) {
  if (a.letters.size() != b.letters.size())
    return a.letters.size() <=> b.letters.size();
  for (size_t i = 0; i < a.letters.size(); ++i) {
    if (a.letters[i] != b.letters[i]) return a.letters[i] <=> b.letters[i];
  }
  return std::strong_ordering::equal;
}

NCPoly NCPoly::constant(const Rat& c) { return word(Word::one(), c); }

NCPoly NCPoly::word(const Word& w, const Rat& c) {
  NCPoly p;
  if (c != 0) p.terms_.emplace_back(w, c);
  return p;
}

void NCPoly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  // Locate by descending graded order.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const std::pair<Word, Rat>& t, const Word& key) {
                               return graded_less(key, t.first);
                             });
  if (it != terms_.end() && it->first == w) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {w, c});
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  if (other.terms_.empty()) return *this;
  std::vector<std::pair<Word, Rat>> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    auto cmp = graded_compare(terms_[i].first, other.terms_[j].first);
    if (cmp == std::strong_ordering::greater) {
      merged.push_back(std::move(terms_[i++]));
    } else if (cmp == std::strong_ordering::less) {
      merged.push_back(other.terms_[j++]);
    } else {
      Rat c = terms_[i].second + other.terms_[j].second;
      if (c != 0) merged.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) merged.push_back(std::move(terms_[i++]));
  while (j < other.terms_.size()) merged.push_back(other.terms_[j++]);
  terms_ = std::move(merged);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) { return *this += -other; }

NCPoly NCPoly::operator+(const NCPoly& other) const {
  NCPoly r = *this;
  r += other;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& other) const {
  NCPoly r = *this;
  r -= other;
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly NCPoly::scaled(const Rat& c) const {
  NCPoly r = *this;
  r.scale(c);
  return r;
}

void NCPoly::scale(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
}

NCPoly NCPoly::mul(const NCPoly& other) const {
  NCPoly r;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : other.terms_) {
      Word w = wa;
      w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

NCPoly NCPoly::mul_left_letter(Letter l) const {
  NCPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace_back(w.prepend(l), c);
  r.normalize_sorted();
  return r;
}

NCPoly NCPoly::mul_right_letter(Letter l) const {
  NCPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace_back(w.append(l), c);
  r.normalize_sorted();
  return r;
}

NCPoly NCPoly::reversed() const {
  NCPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [w, c] : terms_) r.terms_.emplace_back(w.reversed(), c);
  r.normalize_sorted();
  return r;
}

void NCPoly::make_monic() {
  if (terms_.empty()) return;
  Rat lead = terms_.front().second;
  if (lead == 1) return;
  for (auto& [w, c] : terms_) c /= lead;
}

void NCPoly::normalize_sorted() {
  std::sort(terms_.begin(), terms_.end(),
            [](const std::pair<Word, Rat>& a, const std::pair<Word, Rat>& b) {
              return graded_less(b.first, a.first);
            });
  std::vector<std::pair<Word, Rat>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

std::strong_ordering NCPoly::compare(const NCPoly& a, const NCPoly& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    auto wc = graded_compare(a.terms_[i].first, b.terms_[i].first);
    if (wc != std::strong_ordering::equal) return wc;
    int cc = cmp(a.terms_[i].second, b.terms_[i].second);
    if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

} // namespace qsym
