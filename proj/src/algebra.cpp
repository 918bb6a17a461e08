#include "wildcert/algebra.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

namespace wildcert {

// ---------------------------------------------------------------------------
// Noncommutative polynomials
// ---------------------------------------------------------------------------

void nc_add_term(const Fq& F, NcPoly& p, Word w, uint32_t c) {
  if (c == 0) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(std::move(w), c);
    return;
  }
  uint32_t s = F.add(it->second, c);
  if (s == 0)
    p.erase(it);
  else
    it->second = s;
}

NcPoly nc_add(const Fq& F, const NcPoly& a, const NcPoly& b) {
  NcPoly r = a;
  for (const auto& [w, c] : b) nc_add_term(F, r, w, c);
  return r;
}

NcPoly nc_sub(const Fq& F, const NcPoly& a, const NcPoly& b) {
  NcPoly r = a;
  for (const auto& [w, c] : b) nc_add_term(F, r, w, F.neg(c));
  return r;
}

NcPoly nc_scale(const Fq& F, const NcPoly& a, uint32_t c) {
  NcPoly r;
  if (c == 0) return r;
  for (const auto& [w, x] : a) r[w] = F.mul(x, c);
  return r;
}

NcPoly nc_mul(const Fq& F, const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      nc_add_term(F, r, std::move(w), F.mul(ca, cb));
    }
  return r;
}

NcPoly nc_pow(const Fq& F, const NcPoly& a, uint32_t n) {
  NcPoly r{{Word{}, 1u}};
  for (uint32_t i = 0; i < n; ++i) r = nc_mul(F, r, a);
  return r;
}

std::string nc_str(const NcPoly& p, const std::vector<std::string>& gens) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : p) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c);
    for (auto g : w) s += "*" + gens[g];
  }
  return s;
}

Presentation Presentation::with_field(const FieldSpec& f) const {
  if (f.p != field.p)
    throw error("cannot move presentation to a field of different characteristic");
  Presentation r = *this;
  r.field = f;
  auto check = [&](const NcPoly& poly) {
    for (const auto& [w, c] : poly) {
      (void)w;
      if (c >= field.p)
        throw error("presentation has coefficients outside the prime subfield");
    }
  };
  for (const auto& rel : relations) check(rel);
  for (const auto& z : central) check(z);
  return r;
}

// ---------------------------------------------------------------------------
// Degree-bounded rewriting
// ---------------------------------------------------------------------------

namespace {

std::optional<size_t> find_subword(const Word& w, const Word& sub) {
  if (sub.empty() || sub.size() > w.size()) return std::nullopt;
  for (size_t pos = 0; pos + sub.size() <= w.size(); ++pos) {
    if (std::equal(sub.begin(), sub.end(), w.begin() + pos)) return pos;
  }
  return std::nullopt;
}

struct Rule {
  Word lhs;
  NcPoly rhs;  // lhs rewrites to rhs; every rhs word < lhs in deglex
};

NcPoly rule_poly(const Fq& F, const Rule& r) {
  NcPoly p;
  p[r.lhs] = 1;
  for (const auto& [w, c] : r.rhs) nc_add_term(F, p, w, F.neg(c));
  return p;
}

NcPoly reduce(NcPoly p, const std::vector<Rule>& rules, const Fq& F) {
  for (;;) {
    const Rule* match = nullptr;
    size_t pos = 0;
    Word w;
    uint32_t c = 0;
    for (auto it = p.rbegin(); it != p.rend() && !match; ++it) {
      for (const Rule& r : rules) {
        if (auto mp = find_subword(it->first, r.lhs)) {
          match = &r;
          pos = *mp;
          w = it->first;
          c = it->second;
          break;
        }
      }
    }
    if (!match) return p;
    p.erase(w);
    Word pre(w.begin(), w.begin() + pos);
    Word post(w.begin() + pos + match->lhs.size(), w.end());
    for (const auto& [rw, rc] : match->rhs) {
      Word nw = pre;
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), post.begin(), post.end());
      nc_add_term(F, p, std::move(nw), F.mul(c, rc));
    }
  }
}

void enqueue_overlaps(const Rule& r1, const Rule& r2, uint32_t bound,
                      const Fq& F, std::deque<NcPoly>& pending) {
  const Word& l1 = r1.lhs;
  const Word& l2 = r2.lhs;
  size_t kmax = std::min(l1.size(), l2.size()) - 1;
  for (size_t k = 1; k <= kmax; ++k) {
    // suffix of l1 of length k == prefix of l2 of length k
    if (!std::equal(l1.end() - k, l1.end(), l2.begin())) continue;
    if (l1.size() + l2.size() - k > bound) continue;
    Word tail(l2.begin() + k, l2.end());
    Word head(l1.begin(), l1.end() - k);
    NcPoly s = nc_sub(F, nc_mul(F, r1.rhs, NcPoly{{tail, 1u}}),
                      nc_mul(F, NcPoly{{head, 1u}}, r2.rhs));
    if (!s.empty()) pending.push_back(std::move(s));
  }
}

std::vector<Rule> complete(std::vector<NcPoly> rels, uint32_t bound,
                           const Fq& F) {
  std::vector<Rule> rules;
  std::deque<NcPoly> pending(rels.begin(), rels.end());
  size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > 500000)
      throw non_terminating_error("completion did not settle below the bound");
    NcPoly q = reduce(std::move(pending.front()), rules, F);
    pending.pop_front();
    if (q.empty()) continue;
    auto lead = std::prev(q.end());
    if (lead->first.empty())
      throw inconsistent_relations_error("the unit lies in the relation ideal");
    if (lead->first.size() > bound) continue;  // cannot arise from bounded S-polys
    uint32_t ci = F.inv(lead->second);
    Rule nr;
    nr.lhs = lead->first;
    for (auto it = q.begin(); it != lead; ++it)
      nr.rhs[it->first] = F.neg(F.mul(it->second, ci));
    // retire rules whose leading word became reducible
    std::vector<Rule> kept;
    for (auto& ex : rules) {
      if (find_subword(ex.lhs, nr.lhs))
        pending.push_back(rule_poly(F, ex));
      else
        kept.push_back(std::move(ex));
    }
    rules = std::move(kept);
    rules.push_back(std::move(nr));
    const Rule& added = rules.back();
    for (const Rule& other : rules) {
      enqueue_overlaps(added, other, bound, F, pending);
      if (&other != &added) enqueue_overlaps(other, added, bound, F, pending);
    }
    if (rules.size() > 5000)
      throw non_terminating_error("rewriting system exceeded the rule cap");
  }
  return rules;
}

// ---------------------------------------------------------------------------
// Table construction helpers
// ---------------------------------------------------------------------------

void verify_table(const AlgebraTable& t, const char* who) {
  const Fq& F = *t.field;
  const uint32_t d = t.dim;
  if (d == 0) return;
  // unit acts as a two-sided identity
  for (uint32_t j = 0; j < d; ++j) {
    auto ej = t.basis_vec(j);
    if (t.product(t.unit, ej) != ej || t.product(ej, t.unit) != ej)
      throw non_terminating_error(std::string(who) +
                                  ": unit fails to act as identity");
  }
  // associativity on all basis triples, via left-multiplication matrices
  std::vector<Mat> L(d);
  for (uint32_t i = 0; i < d; ++i) L[i] = t.left_mult(t.basis_vec(i));
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) {
      Mat lhs = L[i].mul(L[j]);
      Mat rhs(t.field, d, d);
      for (uint32_t m = 0; m < d; ++m) {
        uint32_t c = t.sc_at(i, j, m);
        if (c == 0) continue;
        for (size_t g = 0; g < rhs.a.size(); ++g)
          rhs.a[g] = F.add(rhs.a[g], F.mul(c, L[m].a[g]));
      }
      if (!(lhs == rhs))
        throw non_terminating_error(std::string(who) +
                                    ": associativity fails on basis triple");
    }
  // declared relations evaluate to zero
  for (const auto& rel : t.relations) {
    auto v = t.eval_poly(rel);
    if (!std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; }))
      throw non_terminating_error(std::string(who) +
                                  ": a defining relation is nonzero in the table");
  }
}

// Nilpotency of the span of the given columns, under the table product.
bool span_is_nilpotent(const AlgebraTable& t, const Mat& basis) {
  Mat cur = basis;
  for (uint32_t step = 0; step <= t.dim + 1; ++step) {
    if (cur.cols == 0) return true;
    Mat prods(t.field, t.dim, basis.cols * cur.cols);
    uint32_t k = 0;
    for (uint32_t i = 0; i < basis.cols; ++i)
      for (uint32_t j = 0; j < cur.cols; ++j)
        prods.set_col(k++, t.product(basis.col(i), cur.col(j)));
    Mat next = col_space(prods);
    if (next.cols >= cur.cols && step > 0) return false;  // stalled
    cur = next;
  }
  return false;
}

void detect_local_augmented(AlgebraTable& t) {
  const uint32_t d = t.dim;
  if (d == 0) return;
  // basis index 0 must be the unit coordinate
  if (t.unit != t.basis_vec(0)) return;
  // positive-length labels span a candidate ideal
  for (uint32_t i = 1; i < d; ++i)
    if (t.basis_words[i].empty()) return;
  for (const auto& g : t.gens)
    if (g[0] != 0) return;  // generator sticks out of the candidate
  for (uint32_t i = 1; i < d; ++i)
    for (uint32_t j = 1; j < d; ++j)
      if (t.sc_at(i, j, 0) != 0) return;  // product escapes to the unit
  Mat basis(t.field, d, d - 1);
  for (uint32_t i = 1; i < d; ++i) {
    auto v = t.basis_vec(i);
    basis.set_col(i - 1, v);
  }
  if (!span_is_nilpotent(t, basis)) return;
  t.radical_class = AlgebraTable::RadicalClass::LocalAugmented;
  t.radical.clear();
  for (uint32_t i = 1; i < d; ++i) t.radical.push_back(t.basis_vec(i));
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraTable members
// ---------------------------------------------------------------------------

std::vector<uint32_t> AlgebraTable::product(
    const std::vector<uint32_t>& u, const std::vector<uint32_t>& v) const {
  const Fq& F = *field;
  std::vector<uint32_t> r(dim, 0);
  for (uint32_t i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (uint32_t j = 0; j < dim; ++j) {
      if (v[j] == 0) continue;
      uint32_t c = F.mul(u[i], v[j]);
      const uint32_t* row = &sc[(static_cast<size_t>(i) * dim + j) * dim];
      for (uint32_t m = 0; m < dim; ++m)
        if (row[m]) r[m] = F.add(r[m], F.mul(c, row[m]));
    }
  }
  return r;
}

Mat AlgebraTable::left_mult(const std::vector<uint32_t>& v) const {
  Mat m(field, dim, dim);
  for (uint32_t j = 0; j < dim; ++j) m.set_col(j, product(v, basis_vec(j)));
  return m;
}

Mat AlgebraTable::right_mult(const std::vector<uint32_t>& v) const {
  Mat m(field, dim, dim);
  for (uint32_t j = 0; j < dim; ++j) m.set_col(j, product(basis_vec(j), v));
  return m;
}

std::vector<uint32_t> AlgebraTable::basis_vec(uint32_t i) const {
  std::vector<uint32_t> v(dim, 0);
  v[i] = 1;
  return v;
}

std::vector<uint32_t> AlgebraTable::eval_word(const Word& w) const {
  std::vector<uint32_t> v = unit;
  for (auto g : w) v = product(v, gens.at(g));
  return v;
}

std::vector<uint32_t> AlgebraTable::eval_poly(const NcPoly& p) const {
  const Fq& F = *field;
  std::vector<uint32_t> r(dim, 0);
  for (const auto& [w, c] : p) {
    auto v = eval_word(w);
    for (uint32_t m = 0; m < dim; ++m)
      r[m] = F.add(r[m], F.mul(c, v[m]));
  }
  return r;
}

bool AlgebraTable::same_table(const AlgebraTable& other) const {
  return field->spec() == other.field->spec() && dim == other.dim &&
         sc == other.sc && unit == other.unit && gens == other.gens;
}

uint64_t fnv1a(const void* data, size_t len, uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hash_hex(uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

uint64_t AlgebraTable::content_hash() const {
  AlgPtr canon = canonical_form(*this);
  std::vector<uint32_t> data;
  data.push_back(field->p());
  data.push_back(field->e());
  for (auto c : field->spec().modulus) data.push_back(c);
  data.push_back(canon->dim);
  for (const auto& w : canon->basis_words) {
    data.push_back(static_cast<uint32_t>(w.size()));
    for (auto g : w) data.push_back(g);
  }
  for (auto c : canon->sc) data.push_back(c);
  for (auto c : canon->unit) data.push_back(c);
  data.push_back(static_cast<uint32_t>(canon->gens.size()));
  for (const auto& g : canon->gens)
    for (auto c : g) data.push_back(c);
  return fnv1a(data.data(), data.size() * sizeof(uint32_t));
}

// ---------------------------------------------------------------------------
// close_presentation
// ---------------------------------------------------------------------------

AlgPtr close_presentation(const Presentation& pr) {
  auto F = Fq::make(pr.field);
  const uint32_t L = pr.degree_bound;
  const size_t G = pr.generators.size();
  if (G == 0 || G > 200) throw error("bad generator count");

  std::vector<NcPoly> rels = pr.relations;
  for (const auto& z : pr.central) {
    for (size_t g = 0; g < G; ++g) {
      NcPoly gp{{Word{static_cast<uint8_t>(g)}, 1u}};
      rels.push_back(nc_sub(*F, nc_mul(*F, z, gp), nc_mul(*F, gp, z)));
    }
  }
  for (const auto& r : rels) {
    for (const auto& [w, c] : r) {
      if (w.size() > L)
        throw error("relation word exceeds the degree bound");
      if (c >= F->q()) throw error("relation coefficient outside the field");
      for (auto g : w)
        if (g >= G) throw error("relation uses an invalid generator index");
    }
  }

  auto rules = complete(rels, L, *F);

  // normal-form words, generated by prepending letters in length-lex order
  std::set<Word, DegLexLess> lhs_set;
  size_t max_lhs = 0;
  for (const auto& r : rules) {
    lhs_set.insert(r.lhs);
    max_lhs = std::max(max_lhs, r.lhs.size());
  }
  auto reducible_prefix = [&](const Word& w) {
    for (size_t len = 1; len <= std::min(w.size(), max_lhs); ++len) {
      Word pre(w.begin(), w.begin() + len);
      if (lhs_set.count(pre)) return true;
    }
    return false;
  };

  std::vector<Word> basis{Word{}};
  std::vector<Word> layer{Word{}};
  bool stabilized = false;
  for (uint32_t len = 1; len <= L; ++len) {
    std::vector<Word> next;
    for (size_t g = 0; g < G; ++g)
      for (const auto& w : layer) {
        Word cand;
        cand.reserve(w.size() + 1);
        cand.push_back(static_cast<uint8_t>(g));
        cand.insert(cand.end(), w.begin(), w.end());
        if (!reducible_prefix(cand)) next.push_back(std::move(cand));
      }
    if (next.empty()) {
      stabilized = true;
      break;
    }
    basis.insert(basis.end(), next.begin(), next.end());
    layer = std::move(next);
    if (basis.size() > 4096)
      throw non_terminating_error("basis did not stabilize (too many words)");
  }
  if (!stabilized)
    throw non_terminating_error(
        "dimension did not stabilize strictly below the degree bound L=" +
        std::to_string(L));

  const uint32_t d = static_cast<uint32_t>(basis.size());
  std::map<Word, uint32_t, DegLexLess> index;
  for (uint32_t i = 0; i < d; ++i) index[basis[i]] = i;

  auto coords_of = [&](const NcPoly& p) {
    std::vector<uint32_t> v(d, 0);
    for (const auto& [w, c] : p) {
      auto it = index.find(w);
      if (it == index.end())
        throw non_terminating_error(
            "a product escaped the normal-word basis; raise the degree bound");
      v[it->second] = c;
    }
    return v;
  };

  auto table = std::make_shared<AlgebraTable>();
  AlgebraTable& t = *table;
  t.id = pr.name.empty() ? "presentation" : pr.name;
  t.field = F;
  t.dim = d;
  t.generator_names = pr.generators;
  t.basis_words = basis;
  t.relations = rels;
  t.sc.assign(static_cast<size_t>(d) * d * d, 0);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) {
      Word w = basis[i];
      w.insert(w.end(), basis[j].begin(), basis[j].end());
      NcPoly p = reduce(NcPoly{{std::move(w), 1u}}, rules, *F);
      auto v = coords_of(p);
      for (uint32_t m = 0; m < d; ++m)
        t.sc[(static_cast<size_t>(i) * d + j) * d + m] = v[m];
    }
  t.unit = t.basis_vec(0);
  for (size_t g = 0; g < G; ++g) {
    NcPoly p = reduce(NcPoly{{Word{static_cast<uint8_t>(g)}, 1u}}, rules, *F);
    t.gens.push_back(coords_of(p));
  }

  verify_table(t, "close_presentation");
  detect_local_augmented(t);
  return table;
}

// ---------------------------------------------------------------------------
// group_algebra
// ---------------------------------------------------------------------------

AlgPtr group_algebra(const std::vector<std::vector<uint32_t>>& table,
                     const FieldSpec& field, const std::string& id) {
  const uint32_t n = static_cast<uint32_t>(table.size());
  if (n == 0) throw not_a_group_error("empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw not_a_group_error("table is not square");
    for (auto x : row)
      if (x >= n) throw not_a_group_error("table entry out of range");
  }
  std::optional<uint32_t> unit;
  for (uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (uint32_t j = 0; j < n && ok; ++j)
      ok = table[e][j] == j && table[j][e] == j;
    if (ok) {
      unit = e;
      break;
    }
  }
  if (!unit) throw not_a_group_error("no two-sided identity");
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw not_a_group_error("multiplication is not associative");
  for (uint32_t i = 0; i < n; ++i) {
    bool has_inv = false;
    for (uint32_t j = 0; j < n && !has_inv; ++j)
      has_inv = table[i][j] == *unit;
    if (!has_inv) throw not_a_group_error("an element has no inverse");
  }

  // greedy minimal generating set, in element order
  std::vector<uint32_t> gens_elems;
  auto closure = [&](const std::vector<uint32_t>& s) {
    std::vector<bool> seen(n, false);
    seen[*unit] = true;
    std::deque<uint32_t> q{*unit};
    while (!q.empty()) {
      uint32_t x = q.front();
      q.pop_front();
      for (auto g : s) {
        uint32_t y = table[g][x];
        if (!seen[y]) {
          seen[y] = true;
          q.push_back(y);
        }
      }
    }
    return seen;
  };
  std::vector<bool> covered = closure(gens_elems);
  for (uint32_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    gens_elems.push_back(i);
    covered = closure(gens_elems);
  }

  // breadth-first labels, prepending generators
  std::vector<Word> labels(n);
  std::vector<bool> labeled(n, false);
  labeled[*unit] = true;
  std::vector<uint32_t> layer{*unit};
  while (!layer.empty()) {
    std::vector<uint32_t> next;
    for (size_t g = 0; g < gens_elems.size(); ++g)
      for (auto x : layer) {
        uint32_t y = table[gens_elems[g]][x];
        if (labeled[y]) continue;
        labeled[y] = true;
        Word w{static_cast<uint8_t>(g)};
        w.insert(w.end(), labels[x].begin(), labels[x].end());
        labels[y] = std::move(w);
        next.push_back(y);
      }
    layer = std::move(next);
  }

  auto out = std::make_shared<AlgebraTable>();
  AlgebraTable& t = *out;
  t.id = id;
  t.field = Fq::make(field);
  t.dim = n;
  t.basis_words = labels;
  t.sc.assign(static_cast<size_t>(n) * n * n, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      t.sc[(static_cast<size_t>(i) * n + j) * n + table[i][j]] = 1;
  t.unit = t.basis_vec(*unit);
  for (size_t g = 0; g < gens_elems.size(); ++g) {
    t.generator_names.push_back("g" + std::to_string(g));
    t.gens.push_back(t.basis_vec(gens_elems[g]));
  }

  verify_table(t, "group_algebra");

  uint32_t m = n, p = t.field->p();
  while (m % p == 0) m /= p;
  if (m == 1) {
    t.radical_class = AlgebraTable::RadicalClass::PGroupAlgebra;
    const Fq& F = *t.field;
    for (uint32_t g = 0; g < n; ++g) {
      if (g == *unit) continue;
      auto v = t.basis_vec(g);
      for (uint32_t k = 0; k < n; ++k)
        v[k] = F.sub(v[k], t.unit[k]);
      t.radical.push_back(std::move(v));
    }
    Mat basis(t.field, n, static_cast<uint32_t>(t.radical.size()));
    for (uint32_t j = 0; j < t.radical.size(); ++j)
      basis.set_col(j, t.radical[j]);
    if (!span_is_nilpotent(t, basis))
      throw error("augmentation ideal failed the nilpotency audit");
  }
  return out;
}

const std::vector<std::vector<uint32_t>>& radical_basis(const AlgebraTable& a) {
  if (a.radical_class == AlgebraTable::RadicalClass::Unknown)
    throw unsupported_class_error(
        "radical is only available for local-augmented and p-group tables");
  return a.radical;
}

// ---------------------------------------------------------------------------
// Canonical generator walk, quotients, base change
// ---------------------------------------------------------------------------

namespace {

struct Walk {
  std::vector<Word> words;
  std::vector<std::vector<uint32_t>> vecs;
};

// Greedy spanning walk over words in the given generators, in length-lex
// order with letters prepended. The kept word set is closed under suffixes.
Walk generator_walk(const AlgebraTable& a,
                    const std::vector<std::vector<uint32_t>>& gen_vecs,
                    bool require_full) {
  const Fq& F = *a.field;
  Walk walk;
  Mat rows(a.field, 0, a.dim);
  std::vector<uint32_t> pivots;
  auto try_add = [&](const std::vector<uint32_t>& v) {
    std::vector<uint32_t> w = v;
    for (uint32_t i = 0; i < rows.rows; ++i) {
      uint32_t c = w[pivots[i]];
      if (c == 0) continue;
      for (uint32_t j = 0; j < a.dim; ++j)
        w[j] = F.sub(w[j], F.mul(c, rows.at(i, j)));
    }
    uint32_t piv = a.dim;
    for (uint32_t j = 0; j < a.dim; ++j)
      if (w[j]) {
        piv = j;
        break;
      }
    if (piv == a.dim) return false;
    uint32_t s = F.inv(w[piv]);
    for (uint32_t j = 0; j < a.dim; ++j) w[j] = F.mul(w[j], s);
    Mat nr(a.field, rows.rows + 1, a.dim);
    for (uint32_t i = 0; i < rows.rows; ++i)
      for (uint32_t j = 0; j < a.dim; ++j) nr.at(i, j) = rows.at(i, j);
    for (uint32_t j = 0; j < a.dim; ++j) nr.at(rows.rows, j) = w[j];
    rows = std::move(nr);
    pivots.push_back(piv);
    return true;
  };

  if (a.dim == 0) return walk;
  try_add(a.unit);
  walk.words.push_back(Word{});
  walk.vecs.push_back(a.unit);
  std::vector<size_t> layer{0};
  while (!layer.empty() && walk.words.size() < a.dim) {
    std::vector<size_t> next;
    for (size_t g = 0; g < gen_vecs.size(); ++g)
      for (auto idx : layer) {
        auto v = a.product(gen_vecs[g], walk.vecs[idx]);
        if (!try_add(v)) continue;
        Word w{static_cast<uint8_t>(g)};
        w.insert(w.end(), walk.words[idx].begin(), walk.words[idx].end());
        walk.words.push_back(std::move(w));
        walk.vecs.push_back(std::move(v));
        next.push_back(walk.words.size() - 1);
        if (walk.words.size() == a.dim) break;
      }
    layer = std::move(next);
  }
  if (require_full && walk.words.size() != a.dim)
    throw error("the given elements do not generate the algebra");
  return walk;
}

AlgPtr rebuild_on_walk(const AlgebraTable& a, const Walk& walk,
                       std::vector<std::string> gen_names,
                       const std::vector<std::vector<uint32_t>>& gen_vecs,
                       bool carry_relations, const std::string& id) {
  const uint32_t d = a.dim;
  Mat V(a.field, d, d);
  for (uint32_t j = 0; j < d; ++j) V.set_col(j, walk.vecs[j]);
  auto Vi = inverse(V);
  if (!Vi) throw error("walk basis is singular");

  auto out = std::make_shared<AlgebraTable>();
  AlgebraTable& t = *out;
  t.id = id;
  t.field = a.field;
  t.dim = d;
  t.generator_names = std::move(gen_names);
  t.basis_words = walk.words;
  t.sc.assign(static_cast<size_t>(d) * d * d, 0);
  for (uint32_t i = 0; i < d; ++i)
    for (uint32_t j = 0; j < d; ++j) {
      auto prod = Vi->mul_vec(a.product(walk.vecs[i], walk.vecs[j]));
      for (uint32_t m = 0; m < d; ++m)
        t.sc[(static_cast<size_t>(i) * d + j) * d + m] = prod[m];
    }
  t.unit = Vi->mul_vec(a.unit);
  for (const auto& g : gen_vecs) t.gens.push_back(Vi->mul_vec(g));
  if (carry_relations) t.relations = a.relations;

  verify_table(t, "rebuild_on_walk");

  if (a.radical_class != AlgebraTable::RadicalClass::Unknown) {
    t.radical_class = a.radical_class;
    for (const auto& r : a.radical) t.radical.push_back(Vi->mul_vec(r));
  }
  return out;
}

AlgPtr zero_algebra(const AlgebraTable& a, const std::string& id) {
  auto out = std::make_shared<AlgebraTable>();
  out->id = id;
  out->field = a.field;
  out->dim = 0;
  out->generator_names = a.generator_names;
  for (size_t g = 0; g < a.gens.size(); ++g) out->gens.emplace_back();
  return out;
}

}  // namespace

AlgPtr canonical_form(const AlgebraTable& a) {
  if (a.dim == 0) return zero_algebra(a, a.id);
  Walk walk = generator_walk(a, a.gens, true);
  return rebuild_on_walk(a, walk, a.generator_names, a.gens,
                         !a.relations.empty(), a.id);
}

AlgPtr quotient_by_ideal(const AlgebraTable& a,
                         const std::vector<std::vector<uint32_t>>& gens) {
  if (a.dim == 0) return zero_algebra(a, a.id + "/ideal");
  // two-sided ideal closure
  Mat cur(a.field, a.dim, static_cast<uint32_t>(gens.size()));
  for (uint32_t j = 0; j < gens.size(); ++j) cur.set_col(j, gens[j]);
  cur = col_space(cur);
  for (;;) {
    std::vector<Mat> parts{cur};
    for (uint32_t i = 0; i < a.dim; ++i) {
      Mat lm(a.field, a.dim, cur.cols), rm(a.field, a.dim, cur.cols);
      auto ei = a.basis_vec(i);
      for (uint32_t j = 0; j < cur.cols; ++j) {
        lm.set_col(j, a.product(ei, cur.col(j)));
        rm.set_col(j, a.product(cur.col(j), ei));
      }
      parts.push_back(std::move(lm));
      parts.push_back(std::move(rm));
    }
    Mat all = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) all = hstack(all, parts[i]);
    Mat next = col_space(all);
    if (next.cols == cur.cols) break;
    cur = std::move(next);
  }

  if (solve(cur, a.unit).has_value())
    return zero_algebra(a, a.id + "/ideal");  // 1 in the ideal

  QuotientSpace Q(a.field, a.dim, cur);
  const uint32_t d2 = Q.dim();

  AlgebraTable raw;
  raw.id = a.id + "/ideal";
  raw.field = a.field;
  raw.dim = d2;
  raw.generator_names = a.generator_names;
  for (auto c : Q.complement_coords()) raw.basis_words.push_back(a.basis_words[c]);
  raw.sc.assign(static_cast<size_t>(d2) * d2 * d2, 0);
  for (uint32_t i = 0; i < d2; ++i)
    for (uint32_t j = 0; j < d2; ++j) {
      auto prod = Q.project(a.product(Q.lift(raw.basis_vec(i)),
                                      Q.lift(raw.basis_vec(j))));
      for (uint32_t m = 0; m < d2; ++m)
        raw.sc[(static_cast<size_t>(i) * d2 + j) * d2 + m] = prod[m];
    }
  raw.unit = Q.project(a.unit);
  for (const auto& g : a.gens) raw.gens.push_back(Q.project(g));

  // radical descends when the ideal sits inside it
  if (a.radical_class != AlgebraTable::RadicalClass::Unknown) {
    Mat rad(a.field, a.dim, static_cast<uint32_t>(a.radical.size()));
    for (uint32_t j = 0; j < a.radical.size(); ++j) rad.set_col(j, a.radical[j]);
    bool inside = true;
    for (uint32_t j = 0; j < cur.cols && inside; ++j)
      inside = solve(rad, cur.col(j)).has_value();
    if (inside) {
      Mat img = col_space(Q.project_mat(rad));
      raw.radical_class = a.radical_class;
      for (uint32_t j = 0; j < img.cols; ++j) raw.radical.push_back(img.col(j));
      if (!span_is_nilpotent(raw, img))
        throw error("quotient radical failed the nilpotency audit");
    }
  }

  Walk walk = generator_walk(raw, raw.gens, true);
  return rebuild_on_walk(raw, walk, raw.generator_names, raw.gens, false,
                         raw.id);
}

AlgPtr base_change(const AlgebraTable& a, const FieldSpec& f) {
  if (a.field->e() != 1)
    throw algebra_mismatch_error("base change starts from a prime field");
  if (f.p != a.field->p())
    throw algebra_mismatch_error("base change must preserve characteristic");
  auto F2 = Fq::make(f);
  auto out = std::make_shared<AlgebraTable>(a);
  out->field = F2;
  out->id = a.id + "@" + F2->name();
  return out;
}

AlgPtr with_generators(
    const AlgebraTable& a,
    const std::vector<std::pair<std::string, std::vector<uint32_t>>>& gens) {
  std::vector<std::string> names;
  std::vector<std::vector<uint32_t>> vecs;
  for (const auto& [n, v] : gens) {
    names.push_back(n);
    vecs.push_back(v);
  }
  AlgebraTable shadow = a;
  shadow.relations.clear();
  Walk walk = generator_walk(shadow, vecs, true);
  AlgebraTable pre = shadow;
  pre.gens = vecs;
  pre.generator_names = names;
  // keep the local-augmented class only when the new generators stay radical
  if (a.radical_class == AlgebraTable::RadicalClass::LocalAugmented) {
    Mat rad(a.field, a.dim, static_cast<uint32_t>(a.radical.size()));
    for (uint32_t j = 0; j < a.radical.size(); ++j) rad.set_col(j, a.radical[j]);
    for (const auto& v : vecs)
      if (!solve(rad, v).has_value()) {
        pre.radical_class = AlgebraTable::RadicalClass::Unknown;
        pre.radical.clear();
        break;
      }
  } else {
    pre.radical_class = AlgebraTable::RadicalClass::Unknown;
    pre.radical.clear();
  }
  return rebuild_on_walk(pre, walk, names, vecs, false,
                         a.id + "!newgens");
}

}  // namespace wildcert
