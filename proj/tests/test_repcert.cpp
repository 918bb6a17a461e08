#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wildcert/io.hpp"
#include "wildcert/repcert.hpp"

using namespace wildcert;

namespace {

AlgPtr A(const char* name) {
  return close_presentation(corpus_presentation(name));
}

ScanOptions opts(uint64_t seed = 1) {
  ScanOptions o;
  o.seed = seed;
  return o;
}

std::vector<FieldSpec> fq(std::initializer_list<uint64_t> qs) {
  std::vector<FieldSpec> out;
  for (auto q : qs) out.push_back(field_spec_from_q(q));
  return out;
}

}  // namespace

TEST_CASE("family M members have the stated shape") {
  auto a = A("elab_3_2");
  auto m0 = family_M(a, 0);
  CHECK(m0.dim == 2);
  CHECK(m0.act[0].is_zero());  // x acts by zero at lambda = 0
  auto m1 = family_M(a, 1);
  CHECK(m1.act[0] == m1.act[1]);  // lambda = 1: x and y act identically
  CHECK(top(m1).second == 1);
}

TEST_CASE("family M refuses unsuitable algebras") {
  auto pt = A("poly_trunc_3");
  CHECK_THROWS_AS(family_M(pt, 1), relation_violation_error);
}

TEST_CASE("family N members have the stated shape") {
  auto host = A("nfam_host");
  auto n1 = family_N(host, 1);
  CHECK(n1.dim == 3);
  CHECK(rank(n1.act[0]) == 2);  // x restricts to a single Jordan block
  // xy - yx acts by zero
  CHECK(n1.act[0].mul(n1.act[1]) == n1.act[1].mul(n1.act[0]));
  auto n0 = family_N(host, 0);
  CHECK(n0.act[0].is_zero());
  // kleinfour has x^2 = 0, so the N preconditions fail there
  CHECK_THROWS_AS(family_N(A("kleinfour"), 1), relation_violation_error);
}

TEST_CASE("scan of the wild M family over F_3 and F_9") {
  auto rep = scan_family(A("elab_3_2"), FamilyKind::M, fq({3, 9}), opts());
  CHECK(rep.members.size() == 12);
  CHECK(rep.warnings.empty());
  // all members, flagged degenerates included, are absolutely
  // indecomposable and pairwise distinct within each field
  for (const auto& m : rep.members) {
    CHECK(m.relations_ok);
    CHECK(m.indec == "absolutely");
    CHECK_FALSE(m.period);
    CHECK(m.cx.tail_strictly_growing);
    CHECK(m.tau_fixed.has_value());
    CHECK_FALSE(*m.tau_fixed);
  }
  for (uint32_t q : {3u, 9u}) {
    std::vector<uint32_t> classes;
    for (const auto& m : rep.members)
      if (m.q == q) classes.push_back(m.iso_class);
    std::sort(classes.begin(), classes.end());
    CHECK(std::unique(classes.begin(), classes.end()) == classes.end());
    CHECK(classes.size() == q);
  }
  auto cert = certify_wild_lemma(rep);
  CHECK(cert.verdict == Verdict::WildEvidence);
  CHECK_FALSE(cert.unverified_hypotheses.empty());
}

TEST_CASE("scan of the dihedral family is tame-consistent across extensions") {
  auto d8 = A("dihedral8");
  auto rep = scan_family(d8, FamilyKind::M, fq({2, 4, 8}), opts());
  for (const auto& m : rep.members) {
    if (m.flagged) continue;
    REQUIRE(m.period);
    CHECK(*m.period == 2);
    REQUIRE(m.tau_fixed.has_value());
    CHECK(*m.tau_fixed);
  }
  auto cert = certify_wild_lemma(rep);
  CHECK(cert.verdict == Verdict::TameConsistent);
  CHECK_FALSE(cert.unverified_hypotheses.empty());
}

TEST_CASE("scan of the N family certifies wildness") {
  auto rep = scan_family(A("nfam_host"), FamilyKind::N, fq({2, 4}), opts());
  uint32_t flagged = 0;
  for (const auto& m : rep.members)
    if (m.flagged) ++flagged;
  CHECK(flagged == 2);  // lambda = 0 in each field
  auto cert = certify_wild_lemma(rep);
  CHECK(cert.verdict == Verdict::WildEvidence);
}

TEST_CASE("theorem-growth certification") {
  auto c1 = certify_wild_theorem(A("elab_2_3"), opts());
  CHECK(c1.verdict == Verdict::WildAssumingFg);
  REQUIRE(c1.growth);
  CHECK(c1.growth->degree == 2);
  CHECK(c1.growth->krull_proxy == 3);
  bool has_fg = false;
  for (const auto& h : c1.unverified_hypotheses)
    has_fg = has_fg || h.find("Fg assumed") != std::string::npos;
  CHECK(has_fg);

  auto c2 = certify_wild_theorem(A("kleinfour"), opts());
  CHECK(c2.verdict == Verdict::Inconclusive);
  REQUIRE(c2.growth);
  CHECK(c2.growth->krull_proxy == 2);

  auto c3 = certify_wild_theorem(A("poly_trunc_2"), opts());
  CHECK(c3.verdict == Verdict::Inconclusive);
  REQUIRE(c3.growth);
  CHECK(c3.growth->krull_proxy == 1);
}

TEST_CASE("factor rule lifts wildness from the commutator quotient") {
  for (const char* name : {"c5_3", "c6_3"}) {
    auto a = A(name);
    NcPoly comm = parse_nc_expr("xy-yx", a->generator_names, *a->field);
    std::vector<std::vector<uint32_t>> gens{a->eval_poly(comm)};
    auto quot = quotient_by_ideal(*a, gens);
    CHECK(quot->dim == 9);
    auto rep = scan_family(quot, FamilyKind::M, fq({3, 9}), opts());
    auto inner = certify_wild_lemma(rep);
    REQUIRE(inner.verdict == Verdict::WildEvidence);
    auto lifted = certify_factor_rule(a, gens, "xy-yx", inner);
    CHECK(lifted.verdict == Verdict::WildEvidence);
    CHECK(lifted.algebra_dim == 27);
    CHECK(lifted.quotient_certificate);
  }
}

TEST_CASE("factor rule refuses non-wild input") {
  auto d8 = A("dihedral8");
  NcPoly comm = parse_nc_expr("xy-yx", d8->generator_names, *d8->field);
  std::vector<std::vector<uint32_t>> gens{d8->eval_poly(comm)};
  auto quot = quotient_by_ideal(*d8, gens);
  auto rep = scan_family(quot, FamilyKind::M, fq({2, 4}), opts());
  auto inner = certify_wild_lemma(rep);
  CHECK(inner.verdict != Verdict::WildEvidence);
  CHECK_THROWS_AS(certify_factor_rule(d8, gens, "xy-yx", inner),
                  strategy_mismatch_error);
}

TEST_CASE("factor rule detects a mismatched certificate") {
  auto c5 = A("c5_3");
  NcPoly comm = parse_nc_expr("xy-yx", c5->generator_names, *c5->field);
  std::vector<std::vector<uint32_t>> gens{c5->eval_poly(comm)};
  // a wildness certificate for a different algebra
  auto other = certify_wild_theorem(A("elab_2_3"), opts());
  REQUIRE(other.verdict == Verdict::WildAssumingFg);
  CHECK_THROWS_AS(certify_factor_rule(c5, gens, "xy-yx", other),
                  quotient_mismatch_error);
}

TEST_CASE("certificates re-verify from scratch") {
  auto a = A("elab_3_2");
  auto rep1 = scan_family(a, FamilyKind::M, fq({3, 9}), opts(17));
  auto rep2 = scan_family(a, FamilyKind::M, fq({3, 9}), opts(17));
  CHECK(to_json(rep1) == to_json(rep2));
  auto c1 = certify_wild_lemma(rep1);
  auto c2 = certify_wild_lemma(rep2);
  CHECK(to_json(c1) == to_json(c2));
  CHECK(c1.verdict == Verdict::WildEvidence);
}

TEST_CASE("corpus sanity") {
  CHECK(A("dihedral8")->dim == 8);
  CHECK(A("c5_3")->dim == 27);
  CHECK(A("c6_3")->dim == 27);
  CHECK(A("c5_2")->dim == 8);
  CHECK(A("c6_2")->dim == 8);
  CHECK(A("nfam_host")->dim == 8);
  CHECK(A("elab_2_3")->dim == 8);
  CHECK_THROWS_AS(corpus_presentation("nope"), parse_error);
  CHECK(corpus().size() >= 12);
}
