#include "wildcert/module.hpp"

#include <algorithm>
#include <map>

namespace wildcert {

namespace {

constexpr uint64_t kExhaustiveBudget = 1ull << 16;

uint64_t pow_checked(uint64_t base, uint32_t exp, uint64_t cap) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

void require_same_algebra(const ModuleRep& m, const ModuleRep& n) {
  if (m.A.get() != n.A.get() && !m.A->same_table(*n.A))
    throw algebra_mismatch_error("modules live over different algebras");
}

const Mat& memo_action(const ModuleRep& m,
                       std::map<Word, Mat, DegLexLess>& memo, const Word& w) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  Mat r;
  if (w.empty()) {
    r = Mat::identity(m.act.empty() ? m.A->field : m.act[0].F, m.dim);
    r.F = m.A->field;
  } else {
    Word suffix(w.begin() + 1, w.end());
    r = m.act[w[0]].mul(memo_action(m, memo, suffix));
  }
  return memo.emplace(w, std::move(r)).first->second;
}

const std::vector<uint32_t>& memo_vec(
    const ModuleRep& m, std::map<Word, std::vector<uint32_t>, DegLexLess>& memo,
    const Word& w, const std::vector<uint32_t>& v) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::vector<uint32_t> r;
  if (w.empty()) {
    r = v;
  } else {
    Word suffix(w.begin() + 1, w.end());
    r = m.act[w[0]].mul_vec(memo_vec(m, memo, suffix, v));
  }
  return memo.emplace(w, std::move(r)).first->second;
}

// Extension of the generator assignment to an algebra homomorphism,
// verified on (basis element, generator) pairs. Induction then covers all
// products, so this certifies validity for tables without relations.
bool homomorphism_check(const ModuleRep& m) {
  const AlgebraTable& A = *m.A;
  const Fq& F = *A.field;
  std::map<Word, Mat, DegLexLess> memo;
  std::vector<Mat> phi(A.dim);
  for (uint32_t k = 0; k < A.dim; ++k)
    phi[k] = memo_action(m, memo, A.basis_words[k]);
  // unit
  Mat u(A.field, m.dim, m.dim);
  for (uint32_t k = 0; k < A.dim; ++k) {
    if (A.unit[k] == 0) continue;
    for (size_t t = 0; t < u.a.size(); ++t)
      u.a[t] = F.add(u.a[t], F.mul(A.unit[k], phi[k].a[t]));
  }
  if (!(u == Mat::identity(A.field, m.dim))) return false;
  for (size_t g = 0; g < A.gens.size(); ++g) {
    for (uint32_t k = 0; k < A.dim; ++k) {
      Mat lhs = element_action(m, A.gens[g]).mul(phi[k]);
      auto prod = A.product(A.gens[g], A.basis_vec(k));
      Mat rhs(A.field, m.dim, m.dim);
      for (uint32_t t = 0; t < A.dim; ++t) {
        if (prod[t] == 0) continue;
        for (size_t s = 0; s < rhs.a.size(); ++s)
          rhs.a[s] = F.add(rhs.a[s], F.mul(prod[t], phi[t].a[s]));
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

ModuleRep ModuleRep::make(AlgPtr a, std::vector<Mat> actions) {
  if (actions.size() != a->gens.size())
    throw relation_violation_error("one action matrix per generator required");
  uint32_t d = actions.empty() ? 0 : actions[0].rows;
  for (auto& mt : actions) {
    if (mt.rows != d || mt.cols != d)
      throw relation_violation_error("action matrices must be square of equal size");
    if (!mt.F || !mt.F->same(*a->field))
      throw relation_violation_error("action matrices over the wrong field");
  }
  ModuleRep m;
  m.A = std::move(a);
  m.dim = d;
  m.act = std::move(actions);
  if (!check_relations(m))
    throw relation_violation_error(
        "action matrices do not satisfy the defining relations");
  return m;
}

ModuleRep ModuleRep::internal(AlgPtr a, uint32_t dim, std::vector<Mat> actions) {
  ModuleRep m;
  m.A = std::move(a);
  m.dim = dim;
  m.act = std::move(actions);
  return m;
}

uint64_t ModuleRep::content_hash() const {
  std::vector<uint32_t> data;
  data.push_back(dim);
  for (const auto& mt : act)
    for (auto x : mt.a) data.push_back(x);
  uint64_t h = A->content_hash();
  return fnv1a(data.data(), data.size() * sizeof(uint32_t), h ^ 0x9e3779b97f4a7c15ull);
}

bool check_relations(const ModuleRep& m) {
  const AlgebraTable& A = *m.A;
  if (m.dim == 0) return true;
  if (!A.relations.empty()) {
    const Fq& F = *A.field;
    std::map<Word, Mat, DegLexLess> memo;
    for (const auto& rel : A.relations) {
      Mat acc(A.field, m.dim, m.dim);
      for (const auto& [w, c] : rel) {
        const Mat& mw = memo_action(m, memo, w);
        for (size_t t = 0; t < acc.a.size(); ++t)
          acc.a[t] = F.add(acc.a[t], F.mul(c, mw.a[t]));
      }
      if (!acc.is_zero()) return false;
    }
    return true;
  }
  return homomorphism_check(m);
}

ModuleRep regular_module(AlgPtr a) {
  std::vector<Mat> acts;
  for (const auto& g : a->gens) acts.push_back(a->left_mult(g));
  uint32_t d = a->dim;
  return ModuleRep::internal(std::move(a), d, std::move(acts));
}

ModuleRep trivial_module(AlgPtr a) {
  std::vector<Mat> acts;
  switch (a->radical_class) {
    case AlgebraTable::RadicalClass::LocalAugmented:
      for (size_t g = 0; g < a->gens.size(); ++g)
        acts.push_back(Mat::zero(a->field, 1, 1));
      break;
    case AlgebraTable::RadicalClass::PGroupAlgebra:
      for (size_t g = 0; g < a->gens.size(); ++g)
        acts.push_back(Mat::identity(a->field, 1));
      break;
    default:
      throw unsupported_class_error(
          "trivial module needs a local-augmented or p-group table");
  }
  return ModuleRep::internal(std::move(a), 1, std::move(acts));
}

ModuleRep zero_module(AlgPtr a) {
  std::vector<Mat> acts;
  for (size_t g = 0; g < a->gens.size(); ++g)
    acts.push_back(Mat::zero(a->field, 0, 0));
  return ModuleRep::internal(std::move(a), 0, std::move(acts));
}

std::vector<Mat> basis_action_matrices(const ModuleRep& m) {
  std::map<Word, Mat, DegLexLess> memo;
  std::vector<Mat> phi;
  phi.reserve(m.A->dim);
  for (uint32_t k = 0; k < m.A->dim; ++k)
    phi.push_back(memo_action(m, memo, m.A->basis_words[k]));
  return phi;
}

std::vector<std::vector<uint32_t>> basis_actions_on_vector(
    const ModuleRep& m, const std::vector<uint32_t>& v) {
  std::map<Word, std::vector<uint32_t>, DegLexLess> memo;
  std::vector<std::vector<uint32_t>> out;
  out.reserve(m.A->dim);
  for (uint32_t k = 0; k < m.A->dim; ++k)
    out.push_back(memo_vec(m, memo, m.A->basis_words[k], v));
  return out;
}

Mat element_action(const ModuleRep& m, const std::vector<uint32_t>& elem) {
  const Fq& F = *m.A->field;
  std::map<Word, Mat, DegLexLess> memo;
  Mat acc(m.A->field, m.dim, m.dim);
  for (uint32_t k = 0; k < m.A->dim; ++k) {
    if (elem[k] == 0) continue;
    const Mat& mw = memo_action(m, memo, m.A->basis_words[k]);
    for (size_t t = 0; t < acc.a.size(); ++t)
      acc.a[t] = F.add(acc.a[t], F.mul(elem[k], mw.a[t]));
  }
  return acc;
}

std::vector<Mat> hom_space(const ModuleRep& m, const ModuleRep& n) {
  require_same_algebra(m, n);
  const auto F = m.A->field;
  const uint32_t md = m.dim, nd = n.dim;
  if (md == 0 || nd == 0) return {};
  const size_t G = m.act.size();
  Mat stacked(F, 0, md * nd);
  for (size_t g = 0; g < G; ++g) {
    // F X = vec(column-major): vec(FA) = (A^T (x) I) vec(F), vec(BF) = (I (x) B) vec(F)
    Mat c = kronecker(m.act[g].transpose(), Mat::identity(F, nd))
                .sub(kronecker(Mat::identity(F, md), n.act[g]));
    stacked = stacked.rows == 0 ? c : vstack(stacked, c);
  }
  Mat ker = kernel_basis(stacked);
  std::vector<Mat> basis;
  for (uint32_t t = 0; t < ker.cols; ++t) {
    Mat h(F, nd, md);
    for (uint32_t j = 0; j < md; ++j)
      for (uint32_t i = 0; i < nd; ++i)
        h.at(i, j) = ker.at(static_cast<size_t>(j) * nd + i, t);
    basis.push_back(std::move(h));
  }
  return basis;
}

IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, uint64_t seed,
                        uint32_t trials) {
  require_same_algebra(m, n);
  if (m.dim != n.dim)
    return {IsoVerdict::No, std::nullopt, "dimensions differ"};
  if (m.dim == 0)
    return {IsoVerdict::Yes, Mat(m.A->field, 0, 0), "zero modules"};
  if (m.act == n.act)
    return {IsoVerdict::Yes, Mat::identity(m.A->field, m.dim),
            "identical actions"};
  auto H = hom_space(m, n);
  if (H.empty())
    return {IsoVerdict::No, std::nullopt, "hom space is zero"};
  const auto F = m.A->field;
  const uint32_t t = static_cast<uint32_t>(H.size());
  auto combine = [&](const std::vector<uint32_t>& coef) {
    Mat f(F, n.dim, m.dim);
    for (uint32_t k = 0; k < t; ++k) {
      if (coef[k] == 0) continue;
      for (size_t s = 0; s < f.a.size(); ++s)
        f.a[s] = F->add(f.a[s], F->mul(coef[k], H[k].a[s]));
    }
    return f;
  };
  uint64_t total = pow_checked(F->q(), t, kExhaustiveBudget);
  if (total <= kExhaustiveBudget) {
    std::vector<uint32_t> coef(t, 0);
    for (uint64_t it = 1; it < total; ++it) {
      // odometer increment
      for (uint32_t k = 0; k < t; ++k) {
        if (++coef[k] < F->q()) break;
        coef[k] = 0;
      }
      Mat f = combine(coef);
      if (rank(f) == m.dim)
        return {IsoVerdict::Yes, f, "exhaustive search"};
    }
    return {IsoVerdict::No, std::nullopt,
            "no invertible intertwiner (exhaustive over " +
                std::to_string(total) + " candidates)"};
  }
  std::mt19937_64 rng(seed);
  for (uint32_t it = 0; it < trials; ++it) {
    std::vector<uint32_t> coef(t);
    for (auto& c : coef) c = static_cast<uint32_t>(rng() % F->q());
    Mat f = combine(coef);
    if (rank(f) == m.dim) return {IsoVerdict::Yes, f, "sampled intertwiner"};
  }
  return {IsoVerdict::Unknown, std::nullopt,
          "sampling exhausted " + std::to_string(trials) +
              " draws; invertible intertwiners form a Zariski-open set, so "
              "this is improbable-negative evidence"};
}

// --------------------------------------------------------------------------
// End(m) as an algebra: radical and indecomposability
// --------------------------------------------------------------------------

namespace {

struct EndAlgebra {
  std::vector<Mat> basis;
  uint32_t t = 0;
  std::vector<uint32_t> sc;  // coords of h_i h_j
  std::vector<uint32_t> unit_coords;
  FqPtr F;

  uint32_t sc_at(uint32_t i, uint32_t j, uint32_t k) const {
    return sc[(static_cast<size_t>(i) * t + j) * t + k];
  }
  std::vector<uint32_t> mul_coords(const std::vector<uint32_t>& x,
                                   const std::vector<uint32_t>& y) const {
    std::vector<uint32_t> r(t, 0);
    for (uint32_t i = 0; i < t; ++i) {
      if (x[i] == 0) continue;
      for (uint32_t j = 0; j < t; ++j) {
        if (y[j] == 0) continue;
        uint32_t c = F->mul(x[i], y[j]);
        for (uint32_t k = 0; k < t; ++k) {
          uint32_t s = sc_at(i, j, k);
          if (s) r[k] = F->add(r[k], F->mul(c, s));
        }
      }
    }
    return r;
  }
  Mat to_matrix(const std::vector<uint32_t>& coords, uint32_t dim) const {
    Mat f(F, dim, dim);
    for (uint32_t k = 0; k < t; ++k) {
      if (coords[k] == 0) continue;
      for (size_t s = 0; s < f.a.size(); ++s)
        f.a[s] = F->add(f.a[s], F->mul(coords[k], basis[k].a[s]));
    }
    return f;
  }
};

EndAlgebra end_algebra(const ModuleRep& m) {
  EndAlgebra E;
  E.F = m.A->field;
  E.basis = hom_space(m, m);
  E.t = static_cast<uint32_t>(E.basis.size());
  const uint32_t d = m.dim;
  Mat B(E.F, d * d, E.t);
  for (uint32_t k = 0; k < E.t; ++k) {
    for (uint32_t j = 0; j < d; ++j)
      for (uint32_t i = 0; i < d; ++i)
        B.at(static_cast<size_t>(j) * d + i, k) = E.basis[k].at(i, j);
  }
  Mat targets(E.F, d * d, E.t * E.t + 1);
  uint32_t col = 0;
  for (uint32_t i = 0; i < E.t; ++i)
    for (uint32_t j = 0; j < E.t; ++j) {
      Mat p = E.basis[i].mul(E.basis[j]);
      for (uint32_t jj = 0; jj < d; ++jj)
        for (uint32_t ii = 0; ii < d; ++ii)
          targets.at(static_cast<size_t>(jj) * d + ii, col) = p.at(ii, jj);
      ++col;
    }
  Mat id = Mat::identity(E.F, d);
  for (uint32_t jj = 0; jj < d; ++jj)
    for (uint32_t ii = 0; ii < d; ++ii)
      targets.at(static_cast<size_t>(jj) * d + ii, col) = id.at(ii, jj);
  auto X = solve_matrix(B, targets);
  if (!X) throw error("endomorphism products escaped the hom space");
  E.sc.assign(static_cast<size_t>(E.t) * E.t * E.t, 0);
  col = 0;
  for (uint32_t i = 0; i < E.t; ++i)
    for (uint32_t j = 0; j < E.t; ++j) {
      for (uint32_t k = 0; k < E.t; ++k)
        E.sc[(static_cast<size_t>(i) * E.t + j) * E.t + k] = X->at(k, col);
      ++col;
    }
  E.unit_coords.resize(E.t);
  for (uint32_t k = 0; k < E.t; ++k) E.unit_coords[k] = X->at(k, E.t * E.t);
  return E;
}

// Nilpotency of a coordinate-span inside End, by span-power iteration.
bool coords_span_nilpotent(const EndAlgebra& E, const Mat& span) {
  Mat cur = span;
  for (uint32_t step = 0; step <= E.t + 1; ++step) {
    if (cur.cols == 0) return true;
    Mat prods(E.F, E.t, span.cols * cur.cols);
    uint32_t c = 0;
    for (uint32_t i = 0; i < span.cols; ++i)
      for (uint32_t j = 0; j < cur.cols; ++j)
        prods.set_col(c++, E.mul_coords(span.col(i), cur.col(j)));
    Mat next = col_space(prods);
    if (step > 0 && next.cols >= cur.cols) return false;
    cur = next;
  }
  return false;
}

bool coords_span_is_ideal(const EndAlgebra& E, const Mat& span) {
  for (uint32_t j = 0; j < span.cols; ++j) {
    auto v = span.col(j);
    for (uint32_t k = 0; k < E.t; ++k) {
      std::vector<uint32_t> ek(E.t, 0);
      ek[k] = 1;
      if (!solve(span, E.mul_coords(ek, v)).has_value()) return false;
      if (!solve(span, E.mul_coords(v, ek)).has_value()) return false;
    }
  }
  return true;
}

std::optional<Mat> radical_coords(const EndAlgebra& E) {
  // Trace form T(x,y) = Tr(L_{xy}) on End: rad is always inside its kernel,
  // and a nilpotent kernel pins it exactly.
  const Fq& F = *E.F;
  std::vector<uint32_t> tracevec(E.t, 0);
  for (uint32_t k = 0; k < E.t; ++k)
    for (uint32_t u = 0; u < E.t; ++u)
      tracevec[k] = F.add(tracevec[k], E.sc_at(k, u, u));
  Mat G(E.F, E.t, E.t);
  for (uint32_t i = 0; i < E.t; ++i)
    for (uint32_t j = 0; j < E.t; ++j) {
      uint32_t acc = 0;
      for (uint32_t k = 0; k < E.t; ++k) {
        uint32_t c = E.sc_at(i, j, k);
        if (c) acc = F.add(acc, F.mul(c, tracevec[k]));
      }
      G.at(i, j) = acc;
    }
  Mat ker = kernel_basis(G);
  if (coords_span_is_ideal(E, ker) && coords_span_nilpotent(E, ker))
    return ker;
  return std::nullopt;
}

std::optional<Mat> radical_coords_exhaustive(const EndAlgebra& E) {
  uint64_t total = pow_checked(E.F->q(), E.t, kExhaustiveBudget);
  if (total > kExhaustiveBudget) return std::nullopt;
  std::vector<std::vector<uint32_t>> members;
  std::vector<uint32_t> coef(E.t, 0);
  for (uint64_t it = 0; it < total; ++it) {
    if (it > 0) {
      for (uint32_t k = 0; k < E.t; ++k) {
        if (++coef[k] < E.F->q()) break;
        coef[k] = 0;
      }
    }
    // x is radical iff the two-sided ideal it generates is nilpotent
    Mat span(E.F, E.t, 1);
    span.set_col(0, coef);
    span = col_space(span);
    for (;;) {
      Mat prods(E.F, E.t, span.cols * (2 * E.t) + span.cols);
      uint32_t c = 0;
      for (uint32_t j = 0; j < span.cols; ++j) {
        prods.set_col(c++, span.col(j));
        for (uint32_t k = 0; k < E.t; ++k) {
          std::vector<uint32_t> ek(E.t, 0);
          ek[k] = 1;
          prods.set_col(c++, E.mul_coords(ek, span.col(j)));
          prods.set_col(c++, E.mul_coords(span.col(j), ek));
        }
      }
      Mat next = col_space(prods);
      if (next.cols == span.cols) break;
      span = next;
    }
    if (coords_span_nilpotent(E, span)) members.push_back(coef);
  }
  Mat all(E.F, E.t, static_cast<uint32_t>(members.size()));
  for (uint32_t j = 0; j < members.size(); ++j) all.set_col(j, members[j]);
  Mat basis = col_space(all);
  uint64_t expect = pow_checked(E.F->q(), basis.cols, 1ull << 62);
  if (expect != members.size())
    throw error("radical classification inconsistent (not a subspace)");
  return basis;
}

}  // namespace

EndoRadical endo_radical(const ModuleRep& m) {
  EndAlgebra E = end_algebra(m);
  EndoRadical out;
  out.end_dim = E.t;
  if (E.t == 0) {
    out.top_dim = 0;
    return out;
  }
  std::optional<Mat> rad = radical_coords(E);
  if (!rad) rad = radical_coords_exhaustive(E);
  if (!rad)
    throw unsupported_size_error(
        "End(m) radical: trace form inconclusive and End too large to "
        "classify exhaustively (dim " + std::to_string(E.t) + " over " +
        E.F->name() + ")");
  out.top_dim = E.t - rad->cols;
  for (uint32_t j = 0; j < rad->cols; ++j)
    out.radical.push_back(E.to_matrix(rad->col(j), m.dim));
  return out;
}

IndecVerdict is_indecomposable(const ModuleRep& m, uint64_t seed,
                               uint32_t trials) {
  if (m.dim == 0)
    throw error("indecomposability of the zero module is undefined");
  const auto F = m.A->field;
  EndAlgebra E = end_algebra(m);
  auto in_end = [&](const Mat& f) {
    for (const auto& g : m.act)
      if (!(f.mul(g) == g.mul(f))) return false;
    return true;
  };
  // Fitting decompositions of random endomorphisms (fast path)
  std::mt19937_64 rng(seed);
  for (uint32_t it = 0; it < std::min<uint32_t>(trials, 12) && E.t > 1; ++it) {
    std::vector<uint32_t> coef(E.t);
    for (auto& c : coef) c = static_cast<uint32_t>(rng() % F->q());
    Mat f = E.to_matrix(coef, m.dim);
    Mat fn = f.pow(m.dim);
    uint32_t r = rank(fn);
    if (r == 0 || r == m.dim) continue;
    Mat U = col_space(fn);
    Mat K = kernel_basis(fn);
    Mat P = hstack(U, K);
    auto Pi = inverse(P);
    if (!Pi) continue;
    Mat UZ(F, m.dim, m.dim);
    for (uint32_t i = 0; i < m.dim; ++i)
      for (uint32_t j = 0; j < U.cols; ++j) UZ.at(i, j) = U.at(i, j);
    Mat e = UZ.mul(*Pi);
    if (e.mul(e) == e && !e.is_zero() &&
        !(e == Mat::identity(F, m.dim)) && in_end(e))
      return {IndecTag::Decomposable, e, 0};
  }
  // Radical route: no nontrivial idempotent survives in a local End
  EndoRadical er = endo_radical(m);
  if (er.top_dim == 1)
    return {IndecTag::AbsolutelyIndecomposable, std::nullopt, 1};
  // Decide whether End/rad is a division algebra by exhausting it
  Mat radc(F, E.t, static_cast<uint32_t>(er.radical.size()));
  {
    Mat B(F, m.dim * m.dim, E.t);
    for (uint32_t k = 0; k < E.t; ++k)
      for (uint32_t j = 0; j < m.dim; ++j)
        for (uint32_t i = 0; i < m.dim; ++i)
          B.at(static_cast<size_t>(j) * m.dim + i, k) = E.basis[k].at(i, j);
    Mat target(F, m.dim * m.dim, static_cast<uint32_t>(er.radical.size()));
    for (uint32_t c = 0; c < er.radical.size(); ++c)
      for (uint32_t j = 0; j < m.dim; ++j)
        for (uint32_t i = 0; i < m.dim; ++i)
          target.at(static_cast<size_t>(j) * m.dim + i, c) =
              er.radical[c].at(i, j);
    auto X = solve_matrix(B, target);
    if (!X) throw error("radical escaped the hom space");
    radc = *X;
  }
  QuotientSpace Q(F, E.t, radc);
  const uint32_t s = Q.dim();
  uint64_t total = pow_checked(F->q(), s, kExhaustiveBudget);
  if (total > kExhaustiveBudget)
    throw unsupported_size_error("End/rad too large to classify exhaustively");
  auto qmul = [&](const std::vector<uint32_t>& x,
                  const std::vector<uint32_t>& y) {
    return Q.project(E.mul_coords(Q.lift(x), Q.lift(y)));
  };
  std::vector<uint32_t> qunit = Q.project(E.unit_coords);
  std::vector<uint32_t> coef(s, 0);
  std::optional<std::vector<uint32_t>> idem;
  for (uint64_t it = 1; it < total; ++it) {
    for (uint32_t k = 0; k < s; ++k) {
      if (++coef[k] < F->q()) break;
      coef[k] = 0;
    }
    if (coef == qunit) continue;
    if (qmul(coef, coef) == coef) {
      idem = coef;
      break;
    }
  }
  if (!idem) {
    // semisimple with no nontrivial idempotent: a finite division algebra,
    // hence a field extension of the base field
    return {IndecTag::IndecomposableOverBaseField, std::nullopt, s};
  }
  // Hensel-lift the idempotent along the nilpotent radical
  Mat b = E.to_matrix(Q.lift(*idem), m.dim);
  uint32_t three = F->from_int(3), mtwo = F->from_int(-2);
  for (uint32_t it = 0; it < 8 + E.t; ++it) {
    Mat b2 = b.mul(b);
    if (b2 == b) break;
    b = b2.scale(three).add(b2.mul(b).scale(mtwo));
  }
  if (!(b.mul(b) == b) || b.is_zero() || b == Mat::identity(F, m.dim) ||
      !in_end(b))
    throw error("idempotent lifting failed");
  return {IndecTag::Decomposable, b, 0};
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
  require_same_algebra(m, n);
  const auto F = m.A->field;
  std::vector<Mat> acts;
  for (size_t g = 0; g < m.act.size(); ++g) {
    Mat b(F, m.dim + n.dim, m.dim + n.dim);
    for (uint32_t i = 0; i < m.dim; ++i)
      for (uint32_t j = 0; j < m.dim; ++j) b.at(i, j) = m.act[g].at(i, j);
    for (uint32_t i = 0; i < n.dim; ++i)
      for (uint32_t j = 0; j < n.dim; ++j)
        b.at(m.dim + i, m.dim + j) = n.act[g].at(i, j);
    acts.push_back(std::move(b));
  }
  return ModuleRep::internal(m.A, m.dim + n.dim, std::move(acts));
}

ModuleRep restrict_to_invariant(const ModuleRep& m, const Mat& basis) {
  std::vector<Mat> acts;
  for (const auto& g : m.act) {
    auto X = solve_matrix(basis, g.mul(basis));
    if (!X) throw error("span is not invariant under the action");
    acts.push_back(std::move(*X));
  }
  return ModuleRep::internal(m.A, basis.cols, std::move(acts));
}

std::pair<ModuleRep, ModuleRep> split_by_idempotent(const ModuleRep& m,
                                                    const Mat& e) {
  if (e.rows != m.dim || e.cols != m.dim)
    throw not_idempotent_error("witness has the wrong shape");
  if (!(e.mul(e) == e)) throw not_idempotent_error("witness is not idempotent");
  for (const auto& g : m.act)
    if (!(e.mul(g) == g.mul(e)))
      throw not_idempotent_error("witness is not an endomorphism");
  Mat U = col_space(e);
  Mat K = kernel_basis(e);
  return {restrict_to_invariant(m, U), restrict_to_invariant(m, K)};
}

Mat radical_image(const ModuleRep& m) {
  const auto F = m.A->field;
  switch (m.A->radical_class) {
    case AlgebraTable::RadicalClass::LocalAugmented: {
      // rad(A) is generated as a left ideal by the generators
      Mat all(F, m.dim, 0);
      for (const auto& g : m.act) all = all.cols ? hstack(all, g) : g;
      if (all.cols == 0) return Mat(F, m.dim, 0);
      return col_space(all);
    }
    case AlgebraTable::RadicalClass::PGroupAlgebra: {
      Mat all(F, m.dim, 0);
      for (const auto& g : m.act) {
        Mat diff = g.sub(Mat::identity(F, m.dim));
        all = all.cols ? hstack(all, diff) : diff;
      }
      if (all.cols == 0) return Mat(F, m.dim, 0);
      return col_space(all);
    }
    default:
      throw unsupported_class_error(
          "radical action needs a local-augmented or p-group table");
  }
}

std::pair<ModuleRep, uint32_t> top(const ModuleRep& m) {
  if (m.dim == 0) return {m, 0};
  Mat rm = radical_image(m);
  QuotientSpace Q(m.A->field, m.dim, rm);
  std::vector<Mat> acts;
  for (const auto& g : m.act) {
    Mat lifted(m.A->field, m.dim, Q.dim());
    for (uint32_t j = 0; j < Q.dim(); ++j) {
      std::vector<uint32_t> u(Q.dim(), 0);
      u[j] = 1;
      lifted.set_col(j, g.mul_vec(Q.lift(u)));
    }
    acts.push_back(Q.project_mat(lifted));
  }
  uint32_t d = Q.dim();
  return {ModuleRep::internal(m.A, d, std::move(acts)), d};
}

}  // namespace wildcert
