#include "qsym/ncalgebra.hpp"

#include <algorithm>
#include <thread>

#include "qsym/errors.hpp"

namespace qsym {

RewriteSystem::RewriteSystem(int n, const VertexMatrix& a1, const VertexMatrix& a2)
    : n_(n) {
  if (a1.dim() != n || a2.dim() != n)
    throw InvalidArgument("RewriteSystem: matrix dimension mismatch");
  classify(a1, a2);
}

RewriteSystem::RewriteSystem(const Triple& t)
    : RewriteSystem(t.g1.vertex_count(), vertex_matrix(t.g1), vertex_matrix(t.g2)) {}

RewriteSystem::RewriteSystem(const OneGraph& g)
    : RewriteSystem(g.vertex_count(), vertex_matrix(g), vertex_matrix(g)) {}

void RewriteSystem::classify(const VertexMatrix& a1, const VertexMatrix& a2) {
  const size_t nn = static_cast<size_t>(n_) * n_;
  zero_pair_.assign(nn * nn, 0);
  zero_letter_.assign(nn, 0);

  auto edge_zero = [&](const VertexMatrix& x, int rg, int cg, int rh, int ch) {
    // One of the four vanishing patterns: an edge between the row (or
    // column) indices paired with a non-edge between the other two.
    return (x.at(rh, rg) == 1 && x.at(ch, cg) == 0) ||
           (x.at(rg, rh) == 1 && x.at(cg, ch) == 0) ||
           (x.at(ch, cg) == 1 && x.at(rh, rg) == 0) ||
           (x.at(cg, ch) == 1 && x.at(rg, rh) == 0);
  };

  for (int rg = 0; rg < n_; ++rg)
    for (int cg = 0; cg < n_; ++cg)
      for (int rh = 0; rh < n_; ++rh)
        for (int ch = 0; ch < n_; ++ch) {
          bool zero = false;
          if (rg == rh && cg != ch) zero = true;      // row orthogonality
          else if (cg == ch && rg != rh) zero = true; // column orthogonality
          else if (edge_zero(a1, rg, cg, rh, ch) || edge_zero(a2, rg, cg, rh, ch))
            zero = true;
          if (zero)
            zero_pair_[(static_cast<size_t>(rg) * n_ + cg) * nn +
                       static_cast<size_t>(rh) * n_ + ch] = 1;
        }
  for (size_t g = 0; g < nn; ++g)
    if (zero_pair_[g * nn + g]) zero_letter_[g] = 1;
}

NCPoly RewriteSystem::normal_form(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (Letter l : w.letters) {
    if (letter_row(l) >= n_ || letter_col(l) >= n_)
      throw InvalidArgument("normal_form: generator index out of range");
    if (zero_letter(l)) return NCPoly::zero();
    out.push_back(l);
    while (out.size() >= 2) {
      Letter g = out[out.size() - 2], h = out.back();
      if (zero_pair(g, h)) return NCPoly::zero();
      if (g == h) {
        out.pop_back(); // q^2 -> q, recheck the new adjacency
        continue;
      }
      break;
    }
  }
  return NCPoly::word(Word{std::move(out)});
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (letter_row(w.letters[i]) >= n_ || letter_col(w.letters[i]) >= n_)
      throw InvalidArgument("is_normal: generator index out of range");
    if (zero_letter(w.letters[i])) return false;
    if (i + 1 < w.letters.size()) {
      if (w.letters[i] == w.letters[i + 1]) return false;
      if (zero_pair(w.letters[i], w.letters[i + 1])) return false;
    }
  }
  return true;
}

NCPoly RewriteSystem::normalize(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly nf = normal_form(w);
    if (!nf.is_zero()) out.add_term(nf.leading_word(), c);
  }
  return out;
}

NCPoly RewriteSystem::normal_form_random(const Word& w, std::mt19937_64& rng) const {
  for (Letter l : w.letters)
    if (letter_row(l) >= n_ || letter_col(l) >= n_)
      throw InvalidArgument("normal_form: generator index out of range");
  std::vector<Letter> cur = w.letters;
  for (;;) {
    // Collect applicable rule sites: (pos, kind). kind 0 = zero letter,
    // 1 = zero pair, 2 = contraction.
    std::vector<std::pair<size_t, int>> sites;
    for (size_t i = 0; i < cur.size(); ++i) {
      if (zero_letter(cur[i])) sites.push_back({i, 0});
      if (i + 1 < cur.size()) {
        if (zero_pair(cur[i], cur[i + 1])) sites.push_back({i, 1});
        else if (cur[i] == cur[i + 1]) sites.push_back({i, 2});
      }
    }
    if (sites.empty()) return NCPoly::word(Word{cur});
    auto [pos, kind] = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
    if (kind == 0 || kind == 1) return NCPoly::zero();
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(pos));
  }
}

Saturation Saturation::build(const Presentation& p, const RewriteSystem& rs,
                             const SaturationOptions& opts) {
  if (opts.degree_bound < 1)
    throw InvalidArgument("saturate: degree bound must be at least 1");
  Saturation s(rs, opts);
  Presentation cp = p.canonical ? p : canonicalize(p);
  for (const Relation& r : cp.relations) {
    // Relations whose normal form does not fit under the bound cannot
    // contribute inside the truncation; they are skipped, which only makes
    // the membership test weaker, never wrong.
    NCPoly v = rs.normalize(r.poly);
    if (v.degree() <= opts.degree_bound) s.insert(std::move(v));
    // Generators are self-adjoint, so the ideal is closed under reversal.
    NCPoly w = rs.normalize(r.poly.reversed());
    if (w.degree() <= opts.degree_bound) s.insert(std::move(w));
  }
  s.close();
  s.to_reduced_echelon();
  return s;
}

NCPoly Saturation::reduce(NCPoly x) const {
  // Full reduction against the echelon basis. Rows are monic with leading
  // word = pivot; subtracting c*row removes the matched word and only
  // touches strictly smaller words, so one descending sweep suffices.
  size_t i = 0;
  while (i < x.terms().size()) {
    const Word& w = x.terms()[i].first;
    auto it = pivot_.find(w);
    if (it == pivot_.end()) {
      ++i;
      continue;
    }
    Rat c = x.terms()[i].second;
    x -= rows_[static_cast<size_t>(it->second)].scaled(c);
  }
  return x;
}

void Saturation::track(const NCPoly& x) {
  for (const auto& [w, c] : x.terms()) tracked_.insert(w);
  if (tracked_.size() > opts_.budget) throw BudgetExceeded(tracked_.size(), opts_.budget);
}

bool Saturation::insert(NCPoly x) {
  x = reduce(std::move(x));
  if (x.is_zero()) return false;
  x.make_monic();
  track(x);
  rows_.push_back(std::move(x));
  int idx = static_cast<int>(rows_.size()) - 1;
  pivot_.emplace(rows_.back().leading_word(), idx);
  queue_.push_back(idx);
  return true;
}

void Saturation::close() {
  const int n = rs_.dim();
  std::vector<Letter> letters;
  letters.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) letters.push_back(make_letter(i, j));

  const int jobs = std::max(1, opts_.jobs);
  size_t head = 0;
  while (head < queue_.size()) {
    // Batch: everything currently pending. Products are computed (and
    // monomial-normalized) in parallel; insertion happens serially in a
    // fixed order, so the result does not depend on scheduling.
    std::vector<int> batch(queue_.begin() + static_cast<std::ptrdiff_t>(head),
                           queue_.end());
    head = queue_.size();

    std::vector<NCPoly> sources(batch.size());
    for (size_t b = 0; b < batch.size(); ++b)
      sources[b] = rows_[static_cast<size_t>(batch[b])];

    std::vector<std::vector<NCPoly>> products(batch.size());
    auto work = [&](size_t lo, size_t hi) {
      for (size_t b = lo; b < hi; ++b) {
        const NCPoly& src = sources[b];
        if (src.degree() >= opts_.degree_bound) continue; // cannot grow
        auto& out = products[b];
        out.reserve(letters.size() * 2);
        for (Letter l : letters) {
          out.push_back(rs_.normalize(src.mul_left_letter(l)));
          out.push_back(rs_.normalize(src.mul_right_letter(l)));
        }
      }
    };
    if (jobs == 1 || batch.size() < 2) {
      work(0, batch.size());
    } else {
      std::vector<std::thread> threads;
      size_t chunk = (batch.size() + static_cast<size_t>(jobs) - 1) / static_cast<size_t>(jobs);
      for (int t = 0; t < jobs; ++t) {
        size_t lo = static_cast<size_t>(t) * chunk;
        size_t hi = std::min(batch.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(work, lo, hi);
      }
      for (auto& th : threads) th.join();
    }

    for (auto& out : products)
      for (auto& cand : out) insert(std::move(cand));
  }
}

void Saturation::to_reduced_echelon() {
  // Ascending pivot order: when a row is processed, every smaller pivot's
  // row is already fully reduced, so one pass yields the canonical reduced
  // form of the span.
  std::vector<int> order(rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return graded_less(rows_[static_cast<size_t>(a)].leading_word(),
                       rows_[static_cast<size_t>(b)].leading_word());
  });
  for (int idx : order) {
    NCPoly& row = rows_[static_cast<size_t>(idx)];
    NCPoly tail = row;
    // Drop the leading (pivot) term, reduce the rest, reassemble.
    tail -= NCPoly::word(row.leading_word(), row.leading_coeff());
    NCPoly reduced = reduce(std::move(tail));
    NCPoly rebuilt = NCPoly::word(row.leading_word(), 1);
    rebuilt += reduced;
    row = std::move(rebuilt);
  }
  std::vector<NCPoly> sorted;
  sorted.reserve(rows_.size());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return graded_less(rows_[static_cast<size_t>(b)].leading_word(),
                       rows_[static_cast<size_t>(a)].leading_word());
  });
  for (int idx : order) sorted.push_back(std::move(rows_[static_cast<size_t>(idx)]));
  rows_ = std::move(sorted);
  pivot_.clear();
  for (size_t i = 0; i < rows_.size(); ++i)
    pivot_.emplace(rows_[i].leading_word(), static_cast<int>(i));
}

MembershipResult Saturation::membership(const NCPoly& x) const {
  if (x.degree() > opts_.degree_bound)
    throw InvalidArgument("membership: degree " + std::to_string(x.degree()) +
                          " exceeds bound " + std::to_string(opts_.degree_bound));
  NCPoly r = reduce(rs_.normalize(x));
  return r.is_zero() ? MembershipResult::Proved : MembershipResult::NotProvableAtBound;
}

CommutativityResult prove_commutativity(const Saturation& s, int n) {
  CommutativityResult res;
  res.proved = true;
  if (s.degree_bound() < 2) {
    res.proved = false;
    for (int a = 0; a < n * n; ++a)
      for (int b = a + 1; b < n * n; ++b)
        res.inconclusive_pairs.push_back({{a / n, a % n}, {b / n, b % n}});
    return res;
  }
  for (int a = 0; a < n * n; ++a) {
    for (int b = a + 1; b < n * n; ++b) {
      Generator ga{a / n, a % n}, gb{b / n, b % n};
      NCPoly comm = NCPoly::generator(ga).mul(NCPoly::generator(gb)) -
                    NCPoly::generator(gb).mul(NCPoly::generator(ga));
      if (!s.proves(comm)) {
        res.proved = false;
        res.inconclusive_pairs.push_back({ga, gb});
      }
    }
  }
  return res;
}

EntryMap derived_entry_map(const Saturation& s, int n) {
  EntryMap em;
  std::vector<bool> zero(static_cast<size_t>(n) * n, false);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.proves(NCPoly::generator({i, j}))) {
        zero[static_cast<size_t>(i) * n + j] = true;
        em.zeros.push_back({i, j});
      }

  // Union-find over the surviving entries.
  std::vector<int> parent(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };

  for (int a = 0; a < n * n; ++a) {
    if (zero[static_cast<size_t>(a)]) continue;
    for (int b = a + 1; b < n * n; ++b) {
      if (zero[static_cast<size_t>(b)]) continue;
      if (find(a) == find(b)) continue;
      NCPoly diff = NCPoly::generator({a / n, a % n}) - NCPoly::generator({b / n, b % n});
      if (s.proves(diff)) unite(a, b);
    }
  }
  std::map<int, std::vector<Generator>> groups;
  for (int a = 0; a < n * n; ++a) {
    if (zero[static_cast<size_t>(a)]) continue;
    groups[find(a)].push_back({a / n, a % n});
  }
  for (auto& [root, members] : groups) em.classes.push_back(std::move(members));
  std::sort(em.classes.begin(), em.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return em;
}

} // namespace qsym
