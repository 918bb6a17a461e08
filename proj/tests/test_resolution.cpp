#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracle.hpp"
#include "wildcert/repcert.hpp"
#include "wildcert/resolution.hpp"

using namespace wildcert;

namespace {

AlgPtr A(const char* name) {
  return close_presentation(corpus_presentation(name));
}

std::vector<uint32_t> betti_of(const ResolutionTable& t) {
  std::vector<uint32_t> b;
  for (const auto& r : t.rows) b.push_back(r.b_n);
  return b;
}

}  // namespace

TEST_CASE("Betti table of the simple over k[x]/(x^2): constant") {
  auto a = A("poly_trunc_2");
  auto t = minimal_resolution(trivial_module(a), 10);
  for (const auto& r : t.rows) {
    CHECK(r.b_n == 1);
    CHECK(r.dim_syzygy == 1);
    CHECK(r.len_Pn == 2);
  }
}

TEST_CASE("Betti table of the simple over the Klein four algebra") {
  auto a = A("kleinfour");
  auto t = minimal_resolution(trivial_module(a), 10);
  // hand-checked prefix, then the independent brute-force oracle
  std::vector<uint32_t> hand{1, 2, 3, 4, 5};
  auto b = betti_of(t);
  for (uint32_t n = 0; n < hand.size(); ++n) CHECK(b[n] == hand[n]);
  auto orc = oracle::betti_trivial(a, 10);
  CHECK(b == orc);
  for (uint32_t n = 0; n <= 10; ++n) CHECK(b[n] == n + 1);
}

TEST_CASE("Betti table of the simple over k[x,y]/(x^3,y^3)") {
  auto a = A("elab_3_2");
  auto t = minimal_resolution(trivial_module(a), 10);
  auto b = betti_of(t);
  CHECK(b == oracle::betti_trivial(a, 10));
  // strictly increasing, linear growth: vanishing second differences
  for (uint32_t n = 1; n <= 10; ++n) CHECK(b[n] > b[n - 1]);
  for (uint32_t n = 2; n <= 10; ++n) CHECK(b[n] - b[n - 1] == b[n - 1] - b[n - 2]);
}

TEST_CASE("Betti table of the rank-three elementary abelian algebra") {
  auto a = A("elab_2_3");
  auto t = minimal_resolution(trivial_module(a), 12);
  auto b = betti_of(t);
  std::vector<uint32_t> hand{1, 3, 6, 10, 15};
  for (uint32_t n = 0; n < hand.size(); ++n) CHECK(b[n] == hand[n]);
  for (uint32_t n = 0; n <= 12; ++n) CHECK(b[n] == (n + 1) * (n + 2) / 2);
}

TEST_CASE("syzygies of small modules") {
  auto pt = A("poly_trunc_2");
  CHECK(syzygy(regular_module(pt)).dim == 0);  // projectives die
  CHECK(syzygy(trivial_module(pt)).dim == 1);  // socle of the local algebra

  auto kv = A("kleinfour");
  CHECK(syzygy(trivial_module(kv)).dim == 3);  // the augmentation ideal
}

TEST_CASE("projective covers") {
  auto kv = A("kleinfour");
  auto [p0, e0] = projective_cover(trivial_module(kv));
  CHECK(p0.dim == 4);
  CHECK(rank(e0) == 1);

  auto reg = regular_module(kv);
  auto [p1, e1] = projective_cover(reg);
  CHECK(p1.dim == 4);
  CHECK(kernel_basis(e1).cols == 0);

  auto e32 = A("elab_3_2");
  auto [p2, e2] = projective_cover(family_M(e32, 1));
  CHECK(p2.dim == 9);  // one regular block: the top is one-dimensional
}

TEST_CASE("periodicity detection") {
  auto pt = A("poly_trunc_2");
  auto per = is_periodic(trivial_module(pt), 10, 1, 16);
  REQUIRE(per.period);
  CHECK(*per.period == 1);

  auto pt3 = A("poly_trunc_3");
  per = is_periodic(trivial_module(pt3), 10, 1, 16);
  REQUIRE(per.period);
  CHECK(*per.period == 2);

  auto kv = A("kleinfour");
  per = is_periodic(trivial_module(kv), 10, 1, 16);
  CHECK_FALSE(per.period);
  CHECK_FALSE(per.unknown_encountered);
}

TEST_CASE("the dihedral family is periodic of period two over F_4") {
  auto d8 = base_change(*A("dihedral8"), FieldSpec{2, 2, {}});
  for (uint32_t lam = 1; lam < 4; ++lam) {
    auto per = is_periodic(family_M(d8, lam), 10, 1, 32);
    REQUIRE(per.period);
    CHECK(*per.period == 2);
  }
}

TEST_CASE("complexity estimates") {
  auto mk_table = [](std::vector<uint32_t> b) {
    ResolutionTable t;
    t.cutoff = static_cast<uint32_t>(b.size()) - 1;
    uint32_t dim = 0;
    for (uint32_t n = 0; n < b.size(); ++n) {
      t.rows.push_back({n, b[n], 4ull * b[n], dim});
      dim = 4 * b[n] - dim;
    }
    return t;
  };
  PeriodicityResult none;
  none.dmax = 10;

  auto constant = complexity_estimate(mk_table({1, 1, 1, 1, 1, 1, 1, 1, 1}), none);
  CHECK(constant.c_hat == 1);

  std::vector<uint32_t> lin;
  for (uint32_t n = 0; n <= 10; ++n) lin.push_back(n + 1);
  auto klein = complexity_estimate(mk_table(lin), none);
  CHECK(klein.c_hat == 2);
  CHECK(klein.evidence_lower_bound == 2);
  CHECK(klein.tail_strictly_growing);

  auto zero_tail =
      complexity_estimate(mk_table({1, 2, 1, 0, 0, 0, 0, 0, 0}), none);
  CHECK(zero_tail.c_hat == 0);
  CHECK(zero_tail.certified_finite_projdim);

  PeriodicityResult p2;
  p2.period = 2;
  p2.dmax = 10;
  auto periodic = complexity_estimate(mk_table({1, 1, 1, 1, 1, 1, 1, 1, 1}), p2);
  CHECK(periodic.c_hat == 1);
  CHECK(periodic.certified_periodic);

  CHECK_THROWS_AS(complexity_estimate(mk_table({1, 1, 1}), none),
                  table_too_short_error);
}

TEST_CASE("ext dimensions over local-augmented algebras") {
  auto pt = A("poly_trunc_2");
  auto dims = ext_dims(trivial_module(pt), 8);
  for (auto d : dims) CHECK(d == 1);

  auto kv = A("kleinfour");
  dims = ext_dims(trivial_module(kv), 8);
  for (uint32_t n = 0; n <= 8; ++n) CHECK(dims[n] == n + 1);

  dims = ext_dims(regular_module(kv), 8);
  CHECK(dims[0] == 1);
  for (uint32_t n = 1; n <= 8; ++n) CHECK(dims[n] == 0);
}

TEST_CASE("Carlson modules over the Klein four algebra") {
  auto kv = A("kleinfour");
  auto chain = resolve_chain(trivial_module(kv), 9);
  CHECK(chain.steps[1].b == 2);  // Ext^1 is two-dimensional
  for (uint32_t c0 = 0; c0 < 2; ++c0)
    for (uint32_t c1 = 0; c1 < 2; ++c1) {
      if (c0 == 0 && c1 == 0) {
        CHECK_THROWS_AS(carlson_module(chain, Cocycle{1, {0, 0}}),
                        zero_cocycle_error);
        continue;
      }
      ModuleRep L = carlson_module(chain, Cocycle{1, {c0, c1}});
      CHECK(L.dim == 2);  // dim Omega^1(k) - 1
      auto per = is_periodic(L, 8, 1, 32);
      REQUIRE(per.period);
      CHECK(*per.period <= 2);
    }
  // degree-n dimension law: dim L = dim Omega^n(k) - 1
  ModuleRep L2 = carlson_module(chain, Cocycle{2, {1, 0, 0}});
  CHECK(L2.dim == chain.omega(2).dim - 1);
  CHECK_THROWS_AS(carlson_module(chain, Cocycle{1, {1, 0, 0}}),
                  not_a_cocycle_error);
}

TEST_CASE("growth estimation by finite differences") {
  std::vector<uint32_t> ones(9, 1);
  auto g = hilbert_growth(ones);
  CHECK(g.degree == 0);
  CHECK(g.krull_proxy == 1);

  std::vector<uint32_t> lin;
  for (uint32_t n = 0; n <= 10; ++n) lin.push_back(n + 1);
  g = hilbert_growth(lin);
  CHECK(g.degree == 1);
  CHECK(g.krull_proxy == 2);

  std::vector<uint32_t> quad;
  for (uint32_t n = 0; n <= 12; ++n) quad.push_back((n + 1) * (n + 2) / 2);
  g = hilbert_growth(quad);
  CHECK(g.degree == 2);
  CHECK(g.krull_proxy == 3);

  std::vector<uint32_t> expo;
  for (uint32_t n = 0; n < 12; ++n) expo.push_back(1u << n);
  CHECK_THROWS_AS(hilbert_growth(expo), unstable_growth_error);
  CHECK_THROWS_AS(hilbert_growth({1, 2, 3}), table_too_short_error);
}

TEST_CASE("modules produced by the resolution machinery satisfy relations") {
  auto kv = A("kleinfour");
  CHECK(check_relations(syzygy(trivial_module(kv))));
  auto chain = resolve_chain(family_M(kv, 1), 3);
  for (uint32_t n = 1; n <= 3; ++n) CHECK(check_relations(chain.omega(n)));
  CHECK(check_relations(carlson_module(resolve_chain(trivial_module(kv), 3),
                                       Cocycle{1, {1, 1}})));
  CHECK(check_relations(top(regular_module(kv)).first));
}

TEST_CASE("syzygy dimension recurrence holds on computed tables") {
  for (const char* name : {"kleinfour", "elab_3_2", "dihedral8", "nfam_host"}) {
    auto a = A(name);
    auto t = minimal_resolution(trivial_module(a), 9);
    for (uint32_t n = 0; n + 1 <= 9; ++n)
      CHECK(t.rows[n + 1].dim_syzygy ==
            t.rows[n].b_n * a->dim - t.rows[n].dim_syzygy);
  }
}

TEST_CASE("syzygy commutes with direct sums up to isomorphism") {
  auto kv = A("kleinfour");
  std::vector<std::pair<ModuleRep, ModuleRep>> pairs;
  pairs.emplace_back(trivial_module(kv), family_M(kv, 1));
  pairs.emplace_back(family_M(kv, 0), family_M(kv, 1));
  auto e32 = A("elab_3_2");
  pairs.emplace_back(trivial_module(e32), family_M(e32, 2));
  for (const auto& [m, n] : pairs) {
    auto lhs = syzygy(direct_sum(m, n));
    auto rhs = direct_sum(syzygy(m), syzygy(n));
    auto iso = is_isomorphic(lhs, rhs, 9, 128);
    CHECK(iso.verdict == IsoVerdict::Yes);
  }
}

TEST_CASE("complexity is additive on direct sums via the maximum") {
  auto kv = A("kleinfour");
  auto e32 = A("elab_3_2");
  auto est = [](const ModuleRep& m) {
    auto chain = resolve_chain(m, 12);
    auto per = periodicity_from_chain(chain, 8, 1, 32);
    return complexity_estimate(table_from_chain(chain, 12), per);
  };
  std::vector<std::pair<ModuleRep, ModuleRep>> pairs;
  pairs.emplace_back(trivial_module(kv), family_M(kv, 1));
  pairs.emplace_back(regular_module(kv), trivial_module(kv));
  pairs.emplace_back(trivial_module(e32), family_M(e32, 1));
  for (const auto& [m, n] : pairs) {
    auto cm = est(m), cn = est(n), cs = est(direct_sum(m, n));
    REQUIRE(cm.c_hat);
    REQUIRE(cn.c_hat);
    REQUIRE(cs.c_hat);
    CHECK(*cs.c_hat == std::max(*cm.c_hat, *cn.c_hat));
  }
}
