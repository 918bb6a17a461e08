#include "wildcert/repcert.hpp"

#include <algorithm>

namespace wildcert {

namespace {

std::string field_list_str(const std::vector<FieldSpec>& fields) {
  std::string s;
  for (const auto& f : fields) {
    if (!s.empty()) s += ",";
    uint64_t q = 1;
    for (uint32_t i = 0; i < f.e; ++i) q *= f.p;
    s += "F_" + std::to_string(q);
  }
  return s;
}

Mat shift_matrix(FqPtr F, uint32_t lambda) {
  Mat x(F, 2, 2);
  x.at(0, 1) = lambda;
  return x;
}

void check_family_preconditions_M(const AlgebraTable& A) {
  if (A.gens.size() < 2)
    throw relation_violation_error("family M needs two designated generators");
  const auto& rad = radical_basis(A);
  Mat radm(A.field, A.dim, static_cast<uint32_t>(rad.size()));
  for (uint32_t j = 0; j < rad.size(); ++j) radm.set_col(j, rad[j]);
  for (int g = 0; g < 2; ++g)
    if (!solve(radm, A.gens[g]).has_value())
      throw relation_violation_error(
          "designated generator lies outside the radical");
  // independence modulo rad^2
  Mat sq(A.field, A.dim, static_cast<uint32_t>(rad.size() * rad.size()));
  uint32_t c = 0;
  for (uint32_t i = 0; i < rad.size(); ++i)
    for (uint32_t j = 0; j < rad.size(); ++j)
      sq.set_col(c++, A.product(rad[i], rad[j]));
  Mat sqb = col_space(sq);
  Mat xg(A.field, A.dim, sqb.cols + 2);
  for (uint32_t j = 0; j < sqb.cols; ++j) xg.set_col(j, sqb.col(j));
  xg.set_col(sqb.cols, A.gens[0]);
  xg.set_col(sqb.cols + 1, A.gens[1]);
  if (rank(xg) != sqb.cols + 2)
    throw relation_violation_error(
        "designated generators are dependent modulo rad^2");
}

}  // namespace

ModuleRep family_M(AlgPtr a, uint32_t lambda) {
  const AlgebraTable& A = *a;
  check_family_preconditions_M(A);
  if (lambda >= A.field->q())
    throw relation_violation_error("lambda outside the field");
  std::vector<Mat> acts;
  acts.push_back(shift_matrix(A.field, lambda));
  acts.push_back(shift_matrix(A.field, 1));
  for (size_t g = 2; g < A.gens.size(); ++g)
    acts.push_back(Mat::zero(A.field, 2, 2));
  return ModuleRep::make(a, std::move(acts));
}

ModuleRep family_N(AlgPtr a, uint32_t lambda) {
  const AlgebraTable& A = *a;
  if (A.gens.size() < 2)
    throw relation_violation_error("family N needs two designated generators");
  if (lambda >= A.field->q())
    throw relation_violation_error("lambda outside the field");
  auto zero = std::vector<uint32_t>(A.dim, 0);
  if (A.product(A.gens[1], A.gens[1]) != zero)
    throw relation_violation_error("family N needs y^2 = 0");
  if (A.product(A.gens[0], A.gens[0]) == zero)
    throw relation_violation_error(
        "family N needs x of nilpotency index at least 3");
  if (A.product(A.gens[0], A.gens[1]) != A.product(A.gens[1], A.gens[0]))
    throw relation_violation_error("family N needs commuting x and y");
  Mat x(A.field, 3, 3), y(A.field, 3, 3);
  x.at(0, 1) = lambda;
  x.at(1, 2) = lambda;
  y.at(0, 2) = 1;
  std::vector<Mat> acts{x, y};
  for (size_t g = 2; g < A.gens.size(); ++g)
    acts.push_back(Mat::zero(A.field, 3, 3));
  return ModuleRep::make(a, std::move(acts));
}

FamilyReport scan_family(AlgPtr a, FamilyKind kind,
                         const std::vector<FieldSpec>& fields,
                         const ScanOptions& opt) {
  FamilyReport rep;
  rep.algebra_id = a->id;
  rep.algebra_hash = hash_hex(a->content_hash());
  rep.algebra_dim = a->dim;
  rep.kind = kind;
  rep.options = opt;
  rep.fields = fields;

  for (const auto& fs : fields) {
    AlgPtr aq = fs == a->field->spec() ? a : base_change(*a, fs);
    const uint32_t q = aq->field->q();

    std::optional<FrobeniusData> fd;
    if (opt.run_tau) {
      try {
        fd = find_frobenius_form(aq, opt.seed, 64);
      } catch (const no_form_found_error& e) {
        rep.warnings.push_back(std::string("F_") + std::to_string(q) +
                               ": tau checks skipped: " + e.what());
      }
    }

    std::vector<std::pair<uint32_t, ModuleRep>> class_reps;  // class id, rep
    FamilyReport::FieldSummary summary;
    summary.q = q;

    for (uint32_t lam = 0; lam < q; ++lam) {
      FamilyMember mem;
      mem.q = q;
      mem.lambda = lam;
      try {
        ModuleRep m = kind == FamilyKind::M ? family_M(aq, lam)
                                            : family_N(aq, lam);
        mem.relations_ok = true;
        mem.module_hash = hash_hex(m.content_hash());
        if (lam == 0) {
          // the x-action vanishes: the member leaves the generic stratum of
          // the one-parameter family (for N the x-restriction decomposes),
          // so it is measured and reported but excluded from evidence
          mem.flagged = true;
          mem.flag_reason =
              kind == FamilyKind::N
                  ? "lambda = 0: the x-restriction decomposes; excluded from "
                    "evidence"
                  : "lambda = 0: x acts by zero (degenerate member); excluded "
                    "from evidence";
        }

        IndecVerdict iv = is_indecomposable(m, opt.seed, opt.trials);
        switch (iv.tag) {
          case IndecTag::AbsolutelyIndecomposable:
            mem.indec = "absolutely";
            break;
          case IndecTag::IndecomposableOverBaseField:
            mem.indec = "over_base_field";
            break;
          case IndecTag::Decomposable:
            mem.indec = "decomposable";
            break;
        }
        mem.endo_top_dim = iv.top_dim;

        // isomorphism class within this field
        uint32_t cls = static_cast<uint32_t>(class_reps.size());
        for (const auto& [cid, rm] : class_reps) {
          IsoResult iso = is_isomorphic(m, rm, opt.seed, opt.trials);
          if (iso.verdict == IsoVerdict::Yes) {
            cls = cid;
            break;
          }
          if (iso.verdict == IsoVerdict::Unknown) {
            mem.errors.push_back("iso test vs class " + std::to_string(cid) +
                                 " returned Unknown");
            rep.warnings.push_back("F_" + std::to_string(q) + " lambda " +
                                   std::to_string(lam) +
                                   ": unresolved isomorphism test");
          }
        }
        if (cls == class_reps.size()) class_reps.emplace_back(cls, m);
        mem.iso_class = cls;

        ResolutionChain chain =
            resolve_chain(m, std::max(opt.cutoff, opt.dmax));
        ResolutionTable table = table_from_chain(chain, opt.cutoff);
        for (const auto& row : table.rows) mem.betti.push_back(row.b_n);
        PeriodicityResult per =
            periodicity_from_chain(chain, opt.dmax, opt.seed, opt.trials);
        mem.period = per.period;
        mem.period_unknown = per.unknown_encountered;
        mem.cx = complexity_estimate(table, per);

        if (fd) {
          ModuleRep tau = ar_translate_omega(m, *fd);
          IsoResult iso = is_isomorphic(tau, m, opt.seed, opt.trials);
          if (iso.verdict == IsoVerdict::Yes)
            mem.tau_fixed = true;
          else if (iso.verdict == IsoVerdict::No)
            mem.tau_fixed = false;
          else
            mem.errors.push_back("tau-fixedness test returned Unknown");
        }
      } catch (const error& e) {
        mem.errors.push_back(e.what());
      }
      if (!mem.flagged && mem.relations_ok) ++summary.scanned;
      rep.members.push_back(std::move(mem));
    }

    // distinct classes among nonflagged members
    std::vector<uint32_t> seen;
    for (const auto& mem : rep.members) {
      if (mem.q != q || mem.flagged || !mem.relations_ok) continue;
      if (std::find(seen.begin(), seen.end(), mem.iso_class) == seen.end())
        seen.push_back(mem.iso_class);
    }
    summary.distinct = static_cast<uint32_t>(seen.size());
    rep.per_field.push_back(summary);
  }
  return rep;
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::WildEvidence: return "wild_evidence";
    case Verdict::WildAssumingFg: return "wild_assuming_fg";
    case Verdict::TameConsistent: return "tame_consistent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Certificate certify_wild_lemma(const FamilyReport& r) {
  Certificate cert;
  cert.strategy = "lemma_family";
  cert.algebra_id = r.algebra_id;
  cert.algebra_hash = r.algebra_hash;
  cert.algebra_dim = r.algebra_dim;
  cert.report = r;

  uint32_t scanned = 0;
  bool all_indec = true, all_nonperiodic = true, all_periodic = true;
  bool all_growing = true, all_tau_moved = true, any_error = false;
  bool distinct_ok = true;
  std::optional<uint32_t> fixed_dim;
  bool dim_consistent = true;
  const uint32_t want_dim = r.kind == FamilyKind::M ? 2 : 3;

  for (const auto& mem : r.members) {
    if (mem.flagged) continue;
    if (!mem.relations_ok || !mem.errors.empty()) {
      any_error = true;
      continue;
    }
    ++scanned;
    all_indec = all_indec && mem.indec == "absolutely";
    bool periodic = mem.period.has_value();
    all_periodic = all_periodic && periodic;
    all_nonperiodic =
        all_nonperiodic && !periodic && !mem.period_unknown;
    all_growing = all_growing && mem.cx.tail_strictly_growing;
    if (!mem.tau_fixed.has_value())
      all_tau_moved = false;
    else
      all_tau_moved = all_tau_moved && !*mem.tau_fixed;
    if (!fixed_dim) fixed_dim = want_dim;
  }
  for (const auto& fsum : r.per_field)
    distinct_ok = distinct_ok && fsum.distinct == fsum.scanned;
  dim_consistent = fixed_dim.has_value();

  auto detail = [](std::initializer_list<std::pair<std::string, std::string>> l) {
    return std::vector<std::pair<std::string, std::string>>(l);
  };
  std::string fields = field_list_str(r.fields);

  if (scanned > 0 && !any_error && all_indec && distinct_ok && dim_consistent &&
      all_nonperiodic && all_growing && all_tau_moved) {
    cert.verdict = Verdict::WildEvidence;
    cert.evidence.push_back(
        {"family_members_scanned",
         detail({{"count", std::to_string(scanned)}, {"fields", fields}})});
    cert.evidence.push_back({"all_members_absolutely_indecomposable", {}});
    for (const auto& fsum : r.per_field)
      cert.evidence.push_back(
          {"pairwise_non_isomorphic_within_field",
           detail({{"field", "F_" + std::to_string(fsum.q)},
                   {"distinct", std::to_string(fsum.distinct)},
                   {"scanned", std::to_string(fsum.scanned)}})});
    cert.evidence.push_back(
        {"fixed_length", detail({{"value", std::to_string(want_dim)},
                                 {"note", "length equals dimension over the "
                                          "local classes in scope"}})});
    cert.evidence.push_back(
        {"non_periodic_to_dmax",
         detail({{"dmax", std::to_string(r.options.dmax)}})});
    cert.evidence.push_back(
        {"betti_tail_strictly_growing",
         detail({{"cutoff", std::to_string(r.options.cutoff)}})});
    cert.evidence.push_back({"tau_moves_every_member", {}});
    cert.unverified_hypotheses.push_back(
        "infinitude extrapolated from " + std::to_string(scanned) +
        " members over finite fields " + fields);
    cert.unverified_hypotheses.push_back(
        "indecomposability and distinctness certified over finite base "
        "fields; the wildness criterion assumes an algebraically closed field");
    return cert;
  }

  if (scanned > 0 && !any_error && all_periodic) {
    cert.verdict = Verdict::TameConsistent;
    cert.evidence.push_back(
        {"family_periodic",
         detail({{"count", std::to_string(scanned)}, {"fields", fields}})});
    for (const auto& mem : r.members)
      if (!mem.flagged && mem.period)
        cert.evidence.push_back(
            {"member_period",
             detail({{"field", "F_" + std::to_string(mem.q)},
                     {"lambda", std::to_string(mem.lambda)},
                     {"period", std::to_string(*mem.period)}})});
    cert.unverified_hypotheses.push_back(
        "periodicity observed for every scanned member is consistent with "
        "tameness; tameness itself admits no finite certification here");
    return cert;
  }

  cert.verdict = Verdict::Inconclusive;
  auto push_flag = [&](const char* name, bool ok) {
    cert.evidence.push_back(
        {name, detail({{"holds", ok ? "true" : "false"}})});
  };
  push_flag("scan_errors_absent", !any_error && scanned > 0);
  push_flag("all_members_absolutely_indecomposable", all_indec);
  push_flag("pairwise_non_isomorphic_within_each_field", distinct_ok);
  push_flag("non_periodic_to_dmax", all_nonperiodic);
  push_flag("betti_tail_strictly_growing", all_growing);
  push_flag("tau_moves_every_member", all_tau_moved);
  return cert;
}

Certificate certify_wild_theorem(AlgPtr a, const ScanOptions& opt) {
  Certificate cert;
  cert.strategy = "theorem_growth";
  cert.algebra_id = a->id;
  cert.algebra_hash = hash_hex(a->content_hash());
  cert.algebra_dim = a->dim;

  ModuleRep k = trivial_module(a);
  cert.growth_betti = ext_dims(k, opt.cutoff);
  try {
    GrowthEstimate g = hilbert_growth(cert.growth_betti);
    cert.growth = g;
    cert.evidence.push_back(
        {"trivial_module_growth_degree",
         {{"degree", std::to_string(g.degree)},
          {"krull_proxy", std::to_string(g.krull_proxy)},
          {"cutoff", std::to_string(opt.cutoff)}}});
    if (g.krull_proxy >= 3) {
      cert.verdict = Verdict::WildAssumingFg;
      cert.unverified_hypotheses.push_back("Fg assumed (not verified computationally)");
      cert.unverified_hypotheses.push_back(
          "growth degree estimated from a finite table (cutoff N=" +
          std::to_string(opt.cutoff) + ")");
    } else {
      cert.verdict = Verdict::Inconclusive;
      cert.evidence.push_back(
          {"criterion_inapplicable",
           {{"reason", "Krull-dimension proxy below 3"}}});
    }
  } catch (const unstable_growth_error& e) {
    cert.verdict = Verdict::Inconclusive;
    cert.evidence.push_back(
        {"growth_unstable", {{"diagnostics", e.diagnostics}}});
  }
  return cert;
}

Certificate certify_factor_rule(AlgPtr a,
                                const std::vector<std::vector<uint32_t>>& ideal_gens,
                                const std::string& ideal_desc,
                                const Certificate& known) {
  if (known.verdict != Verdict::WildEvidence &&
      known.verdict != Verdict::WildAssumingFg)
    throw strategy_mismatch_error(
        "the factor-algebra rule only propagates wildness; the supplied "
        "certificate's verdict is " + verdict_str(known.verdict));
  AlgPtr quot = quotient_by_ideal(*a, ideal_gens);
  std::string qhash = hash_hex(quot->content_hash());
  if (qhash != known.algebra_hash || quot->dim != known.algebra_dim)
    throw quotient_mismatch_error(
        "the supplied certificate does not match the computed factor algebra "
        "(hash " + qhash + " vs " + known.algebra_hash + ")");

  Certificate cert;
  cert.strategy = "factor";
  cert.verdict = known.verdict;
  cert.algebra_id = a->id;
  cert.algebra_hash = hash_hex(a->content_hash());
  cert.algebra_dim = a->dim;
  cert.ideal_desc = ideal_desc;
  cert.quotient_certificate = std::make_shared<Certificate>(known);
  cert.evidence.push_back(
      {"factor_algebra_rule",
       {{"ideal", ideal_desc},
        {"quotient_hash", qhash},
        {"quotient_dim", std::to_string(quot->dim)},
        {"quotient_verdict", verdict_str(known.verdict)}}});
  for (const auto& ev : known.evidence) cert.evidence.push_back(ev);
  cert.unverified_hypotheses = known.unverified_hypotheses;
  cert.unverified_hypotheses.push_back(
      "wildness lifted along the factor-algebra rule; the quotient "
      "certificate's hypotheses apply");
  return cert;
}

// ---------------------------------------------------------------------------
// Bundled presentations
// ---------------------------------------------------------------------------

namespace {

NcPoly word_poly(std::initializer_list<int> letters, uint32_t coeff = 1) {
  Word w;
  for (int l : letters) w.push_back(static_cast<uint8_t>(l));
  NcPoly p;
  if (coeff) p[w] = coeff;
  return p;
}

NcPoly gen_power(const Fq& F, int g, uint32_t n) {
  Word w(n, static_cast<uint8_t>(g));
  NcPoly p;
  p[w] = F.one();
  return p;
}

NcPoly commutator(const Fq& F, int g, int h) {
  NcPoly p = word_poly({g, h});
  return nc_sub(F, p, word_poly({h, g}));
}

Presentation make_pres(const std::string& name, uint32_t p,
                       std::vector<std::string> gens, uint32_t L) {
  Presentation pr;
  pr.name = name;
  pr.field = FieldSpec{p, 1, {}};
  pr.generators = std::move(gens);
  pr.degree_bound = L;
  return pr;
}

}  // namespace

std::vector<Presentation> corpus() {
  std::vector<Presentation> out;

  auto elab2 = [&](uint32_t p, const std::string& name, uint32_t L) {
    Presentation pr = make_pres(name, p, {"x", "y"}, L);
    auto F = Fq::make(pr.field);
    pr.relations = {gen_power(*F, 0, p), gen_power(*F, 1, p),
                    commutator(*F, 0, 1)};
    return pr;
  };
  out.push_back(elab2(2, "kleinfour", 8));
  out.push_back(elab2(2, "elab_2_2", 8));
  out.push_back(elab2(3, "elab_3_2", 12));

  {
    Presentation pr = make_pres("elab_2_3", 2, {"x", "y", "z"}, 8);
    auto F = Fq::make(pr.field);
    pr.relations = {gen_power(*F, 0, 2), gen_power(*F, 1, 2),
                    gen_power(*F, 2, 2), commutator(*F, 0, 1),
                    commutator(*F, 0, 2), commutator(*F, 1, 2)};
    out.push_back(pr);
  }
  {
    Presentation pr = make_pres("dihedral8", 2, {"x", "y"}, 8);
    auto F = Fq::make(pr.field);
    NcPoly r = nc_sub(*F, word_poly({0, 1, 0, 1}), word_poly({1, 0, 1, 0}));
    pr.relations = {gen_power(*F, 0, 2), gen_power(*F, 1, 2), r};
    out.push_back(pr);
  }
  for (uint32_t p : {2u, 3u}) {
    uint32_t L = p == 2 ? 8 : 12;
    {
      Presentation pr =
          make_pres("c5_" + std::to_string(p), p, {"x", "y"}, L);
      auto F = Fq::make(pr.field);
      NcPoly z = commutator(*F, 0, 1);
      pr.relations = {gen_power(*F, 0, p), gen_power(*F, 1, p),
                      nc_pow(*F, z, p)};
      pr.central = {z};
      out.push_back(pr);
    }
    {
      Presentation pr =
          make_pres("c6_" + std::to_string(p), p, {"x", "y"}, L);
      auto F = Fq::make(pr.field);
      NcPoly z = commutator(*F, 0, 1);
      pr.relations = {gen_power(*F, 1, p),
                      nc_sub(*F, gen_power(*F, 0, p), z), nc_pow(*F, z, p)};
      pr.central = {z};
      out.push_back(pr);
    }
  }
  {
    Presentation pr = make_pres("nfam_host", 2, {"x", "y"}, 10);
    auto F = Fq::make(pr.field);
    pr.relations = {gen_power(*F, 0, 4), gen_power(*F, 1, 2),
                    commutator(*F, 0, 1)};
    out.push_back(pr);
  }
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    Presentation pr =
        make_pres("poly_trunc_" + std::to_string(p), p, {"x"}, 2 * p);
    auto F = Fq::make(pr.field);
    pr.relations = {gen_power(*F, 0, p)};
    out.push_back(pr);
  }
  return out;
}

Presentation corpus_presentation(const std::string& name) {
  for (auto& pr : corpus())
    if (pr.name == name) return pr;
  throw parse_error("unknown corpus presentation: " + name);
}

}  // namespace wildcert
