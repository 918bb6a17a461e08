#include "wildcert/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace wildcert {

namespace {

// One cover step: P = A^b -> m with the kernel embedding and the kernel's
// module structure. Everything is exact; minimality is verified.
struct CoverStep {
  uint32_t b = 0;
  ModuleRep cover;
  Mat epi;
  Mat kernel;
  ModuleRep syz;
};

Mat apply_block_diag(const Mat& block, uint32_t copies, const Mat& m) {
  // (I_copies (x) block) * m without materializing the big operator
  const uint32_t d = block.rows;
  Mat r(m.F, m.rows, m.cols);
  for (uint32_t c = 0; c < copies; ++c) {
    for (uint32_t i = 0; i < d; ++i) {
      for (uint32_t k = 0; k < d; ++k) {
        uint32_t x = block.at(i, k);
        if (x == 0) continue;
        for (uint32_t j = 0; j < m.cols; ++j) {
          uint32_t y = m.at(c * d + k, j);
          if (y) r.at(c * d + i, j) = m.F->add(r.at(c * d + i, j),
                                               m.F->mul(x, y));
        }
      }
    }
  }
  return r;
}

CoverStep cover_step(const ModuleRep& m) {
  const AlgebraTable& A = *m.A;
  const auto F = A.field;
  const uint32_t d = A.dim;
  CoverStep st;

  if (m.dim == 0) {
    st.b = 0;
    st.cover = zero_module(m.A);
    st.epi = Mat(F, 0, 0);
    st.kernel = Mat(F, 0, 0);
    st.syz = zero_module(m.A);
    return st;
  }

  Mat rad_im = radical_image(m);
  QuotientSpace Q(F, m.dim, rad_im);
  st.b = Q.dim();
  if (st.b == 0)
    throw error("nonzero module with zero top (radical action not nilpotent?)");

  // epi: block i sends the algebra basis element b_k to phi(b_k).v_i, where
  // v_i is the standard lift of the i-th top coordinate
  st.epi = Mat(F, m.dim, d * st.b);
  for (uint32_t i = 0; i < st.b; ++i) {
    std::vector<uint32_t> v(m.dim, 0);
    v[Q.complement_coords()[i]] = 1;
    auto cols = basis_actions_on_vector(m, v);
    for (uint32_t k = 0; k < d; ++k)
      for (uint32_t r = 0; r < m.dim; ++r)
        st.epi.at(r, i * d + k) = cols[k][r];
  }
  if (rank(st.epi) != m.dim)
    throw error("projective cover candidate is not surjective");

  st.kernel = kernel_basis(st.epi);

  // minimality: the kernel must sit inside rad(A)^b
  {
    Mat radA(F, d, static_cast<uint32_t>(radical_basis(A).size()));
    for (uint32_t j = 0; j < radA.cols; ++j) radA.set_col(j, A.radical[j]);
    QuotientSpace QA(F, d, radA);
    for (uint32_t c = 0; c < st.kernel.cols; ++c)
      for (uint32_t i = 0; i < st.b; ++i) {
        std::vector<uint32_t> slice(d);
        for (uint32_t k = 0; k < d; ++k) slice[k] = st.kernel.at(i * d + k, c);
        auto pr = QA.project(slice);
        if (!std::all_of(pr.begin(), pr.end(),
                         [](uint32_t x) { return x == 0; }))
          throw error("cover is not minimal: kernel escapes rad(P)");
      }
  }

  // cover module: b block copies of the left regular representation
  std::vector<Mat> cover_acts;
  std::vector<Mat> reg;
  for (const auto& g : A.gens) reg.push_back(A.left_mult(g));
  for (const auto& lg : reg) {
    Mat big(F, d * st.b, d * st.b);
    for (uint32_t c = 0; c < st.b; ++c)
      for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j)
          big.at(c * d + i, c * d + j) = lg.at(i, j);
    cover_acts.push_back(std::move(big));
  }
  st.cover = ModuleRep::internal(m.A, d * st.b, std::move(cover_acts));

  // syzygy module structure on the kernel columns
  std::vector<Mat> syz_acts;
  for (const auto& lg : reg) {
    Mat moved = apply_block_diag(lg, st.b, st.kernel);
    auto X = solve_matrix(st.kernel, moved);
    if (!X) throw error("kernel is not invariant (internal)");
    syz_acts.push_back(std::move(*X));
  }
  st.syz = ModuleRep::internal(m.A, st.kernel.cols, std::move(syz_acts));
  return st;
}

}  // namespace

std::pair<ModuleRep, Mat> projective_cover(const ModuleRep& m) {
  CoverStep st = cover_step(m);
  return {st.cover, st.epi};
}

ModuleRep syzygy(const ModuleRep& m) { return cover_step(m).syz; }

ResolutionChain resolve_chain(const ModuleRep& m, uint32_t cutoff) {
  ResolutionChain c;
  c.m0 = m;
  const ModuleRep* cur = &c.m0;
  for (uint32_t n = 0; n <= cutoff; ++n) {
    CoverStep st = cover_step(*cur);
    c.steps.push_back({st.b, std::move(st.epi), std::move(st.kernel),
                       std::move(st.syz)});
    cur = &c.steps.back().syzygy;
  }
  return c;
}

ResolutionTable table_from_chain(const ResolutionChain& c, uint32_t cutoff) {
  ResolutionTable t;
  t.cutoff = cutoff;
  const uint64_t alg_len = c.m0.A->dim;  // composition length for the
                                         // supported local / p-group classes
  for (uint32_t n = 0; n <= cutoff; ++n) {
    ResolutionRow row;
    row.n = n;
    row.b_n = n < c.steps.size() ? c.steps[n].b : 0;
    row.len_Pn = row.b_n * alg_len;
    row.dim_syzygy = c.omega(n).dim;
    t.rows.push_back(row);
  }
  return t;
}

ResolutionTable minimal_resolution(const ModuleRep& m, uint32_t cutoff) {
  return table_from_chain(resolve_chain(m, cutoff), cutoff);
}

PeriodicityResult periodicity_from_chain(const ResolutionChain& c,
                                         uint32_t dmax, uint64_t seed,
                                         uint32_t trials) {
  PeriodicityResult out;
  out.dmax = dmax;
  for (uint32_t d = 1; d <= dmax && d < c.steps.size() + 1; ++d) {
    const ModuleRep& om = c.omega(d);
    if (om.dim != c.m0.dim) continue;
    IsoResult iso = is_isomorphic(c.m0, om, seed, trials);
    if (iso.verdict == IsoVerdict::Yes) {
      out.period = d;
      return out;
    }
    if (iso.verdict == IsoVerdict::Unknown) out.unknown_encountered = true;
  }
  return out;
}

PeriodicityResult is_periodic(const ModuleRep& m, uint32_t dmax, uint64_t seed,
                              uint32_t trials) {
  ResolutionChain c = resolve_chain(m, dmax);
  return periodicity_from_chain(c, dmax, seed, trials);
}

ComplexityEstimate complexity_estimate(const ResolutionTable& t,
                                       const PeriodicityResult& p) {
  const uint32_t N = t.cutoff;
  if (N < 8 || t.rows.size() != N + 1)
    throw table_too_short_error("complexity needs a table computed to N >= 8");
  ComplexityEstimate e;
  e.period = p.period;
  e.nonperiodic_to_dmax =
      p.dmax > 0 && !p.period.has_value() && !p.unknown_encountered;

  auto b = [&](uint32_t n) { return t.rows[n].b_n; };
  const uint32_t n0 = std::max<uint32_t>(1, (N + 1) / 2);
  e.window_start = n0;
  e.window_end = N;

  bool has_zero = false;
  for (uint32_t n = 0; n <= N; ++n) has_zero = has_zero || b(n) == 0;

  bool window_constant = true, window_nondecreasing = true;
  for (uint32_t n = n0 + 1; n <= N; ++n) {
    window_constant = window_constant && b(n) == b(n0);
    window_nondecreasing = window_nondecreasing && b(n) >= b(n - 1);
  }
  e.tail_strictly_growing = window_nondecreasing && b(N) > b(n0);

  auto ipow = [](uint64_t x, uint32_t k) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < k; ++i) r *= x;
    return r;
  };
  auto window_test = [&](uint32_t c) {
    // b_n / n^{c-1} bounded over the window by its first two entries (both
    // parities, guarding quasi-polynomial tables), compared exactly
    for (uint32_t n = n0; n <= N; ++n) {
      bool bounded = false;
      for (uint32_t m = n0; m <= std::min(n0 + 1, N) && !bounded; ++m)
        bounded = static_cast<uint64_t>(b(n)) * ipow(m, c - 1) <=
                  static_cast<uint64_t>(b(m)) * ipow(n, c - 1);
      if (!bounded) return false;
    }
    return true;
  };

  if (has_zero) {
    e.c_hat = 0;
    e.certified_finite_projdim = true;
  } else if (p.period.has_value()) {
    e.c_hat = 1;
    e.certified_periodic = true;
  } else if (window_constant) {
    e.c_hat = 1;
  } else {
    for (uint32_t c = 2; c <= 4; ++c)
      if (window_test(c)) {
        e.c_hat = c;
        break;
      }
  }

  if (e.nonperiodic_to_dmax && e.tail_strictly_growing)
    e.evidence_lower_bound = 2;
  else if (!has_zero)
    e.evidence_lower_bound = 1;

  if (e.c_hat && *e.c_hat >= 1) {
    uint32_t c = *e.c_hat;
    for (uint32_t n = n0; n <= N; ++n) {
      uint64_t num = b(n), den = ipow(n, c - 1);
      if (num * e.window_max_den > e.window_max_num * den) {
        e.window_max_num = num;
        e.window_max_den = den;
      }
    }
  }
  return e;
}

std::vector<uint32_t> ext_dims(const ModuleRep& m, uint32_t cutoff) {
  if (m.A->radical_class != AlgebraTable::RadicalClass::LocalAugmented)
    throw unsupported_class_error(
        "ext dims via cover multiplicities need a local-augmented algebra");
  ResolutionTable t = minimal_resolution(m, cutoff);
  std::vector<uint32_t> dims;
  for (const auto& r : t.rows) dims.push_back(r.b_n);
  return dims;
}

ModuleRep carlson_module(const ResolutionChain& chain, const Cocycle& z) {
  const ModuleRep& k = chain.m0;
  const AlgebraTable& A = *k.A;
  if (A.radical_class != AlgebraTable::RadicalClass::LocalAugmented)
    throw unsupported_class_error("Carlson modules need a local-augmented algebra");
  if (k.dim != 1)
    throw not_a_cocycle_error("the resolved module must be the simple top");
  if (z.degree == 0 || z.degree >= chain.steps.size())
    throw not_a_cocycle_error("cocycle degree outside the resolved range");
  const ResolutionStep& st = chain.steps[z.degree];
  if (z.block_coeffs.size() != st.b)
    throw not_a_cocycle_error("one coefficient per cover block required");
  const auto F = A.field;
  const uint32_t d = A.dim;

  bool zero = std::all_of(z.block_coeffs.begin(), z.block_coeffs.end(),
                          [](uint32_t c) { return c == 0; });
  if (zero) throw zero_cocycle_error("the zero class has no Carlson module");

  // unit coordinate of the algebra (standard basis vector by construction)
  uint32_t u_idx = d;
  for (uint32_t i = 0; i < d; ++i)
    if (A.unit[i]) {
      if (u_idx != d || A.unit[i] != 1)
        throw error("unit is not a standard basis vector");
      u_idx = i;
    }

  // zeta as a functional on P_n: block i pairs with coeff_i * augmentation
  Mat zeta(F, 1, d * st.b);
  for (uint32_t i = 0; i < st.b; ++i) zeta.at(0, i * d + u_idx) = z.block_coeffs[i];

  // cocycle condition: zeta kills the image of d_{n+1}, i.e. the kernel
  Mat pairing = zeta.mul(chain.steps[z.degree].kernel);
  if (!pairing.is_zero())
    throw not_a_cocycle_error("functional does not vanish on the syzygy");

  // factor through the epi onto Omega^n
  const Mat& epi = st.epi;  // dim(Omega^n) x (d b)
  auto zbar = solve(epi.transpose(), zeta.row(0));
  if (!zbar) throw not_a_cocycle_error("functional does not factor through the syzygy");
  Mat zrow(F, 1, st.epi.rows);
  for (uint32_t j = 0; j < st.epi.rows; ++j) zrow.at(0, j) = (*zbar)[j];
  Mat ker = kernel_basis(zrow);
  return restrict_to_invariant(chain.omega(z.degree), ker);
}

GrowthEstimate hilbert_growth(const std::vector<uint32_t>& dims) {
  if (dims.size() < 8)
    throw table_too_short_error("growth estimation needs at least 8 terms");
  GrowthEstimate g;
  std::vector<long long> cur(dims.begin(), dims.end());
  g.differences.push_back(cur);
  const size_t n = dims.size();
  const size_t wstart = n / 2;
  for (uint32_t deg = 0; deg + 1 < n && deg <= 6; ++deg) {
    std::vector<long long> next(g.differences.back().size() - 1);
    for (size_t i = 0; i + 1 < g.differences.back().size(); ++i)
      next[i] = g.differences.back()[i + 1] - g.differences.back()[i];
    g.differences.push_back(next);
    bool stable = !next.empty();
    for (size_t i = std::min(wstart, next.size() ? next.size() - 1 : 0);
         i < next.size(); ++i)
      stable = stable && next[i] == 0;
    if (next.empty()) stable = false;
    if (stable && next.size() > wstart) {
      g.degree = deg;
      g.krull_proxy = deg + 1;
      return g;
    }
  }
  std::ostringstream diag;
  for (const auto& row : g.differences) {
    for (auto x : row) diag << x << " ";
    diag << "\n";
  }
  throw unstable_growth_error("finite differences did not stabilize",
                              diag.str());
}

}  // namespace wildcert
