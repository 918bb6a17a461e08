#include "wildcert/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "wildcert/io.hpp"

namespace wildcert {

namespace {

struct CommonOpts {
  std::string source;
  std::string field;   // "p" or "p,e"
  std::string fields;  // comma list of prime powers
  uint32_t cutoff = 12;
  uint32_t dmax = 10;
  uint64_t seed = 0;
  uint32_t trials = 64;
  std::string format;
  std::string out_path;
};

FieldSpec parse_field_flag(const std::string& s) {
  FieldSpec f;
  size_t comma = s.find(',');
  f.p = static_cast<uint32_t>(std::stoul(s.substr(0, comma)));
  f.e = comma == std::string::npos
            ? 1
            : static_cast<uint32_t>(std::stoul(s.substr(comma + 1)));
  return f;
}

std::vector<FieldSpec> parse_fields_flag(const std::string& s) {
  std::vector<FieldSpec> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(field_spec_from_q(std::stoull(tok)));
  if (out.empty()) throw parse_error("--fields lists no fields");
  return out;
}

AlgPtr load_algebra(const CommonOpts& o) {
  Presentation pr = resolve_presentation_source(o.source);
  if (!o.field.empty()) pr = pr.with_field(parse_field_flag(o.field));
  return close_presentation(pr);
}

void emit(const CommonOpts& o, const std::string& text, std::string& out) {
  if (o.out_path.empty()) {
    out += text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw parse_error("cannot write " + o.out_path);
  f << text;
}

std::vector<FieldSpec> default_scan_fields(uint32_t p) {
  return {FieldSpec{p, 1, {}}, FieldSpec{p, 2, {}}, FieldSpec{p, 3, {}}};
}

int cmd_algebra_check(const CommonOpts& o, uint32_t attempts,
                      std::string& out) {
  AlgPtr a = load_algebra(o);
  json j = algebra_summary_json(*a);
  try {
    FrobeniusData fd = find_frobenius_form(a, o.seed, attempts);
    json fj;
    fj["form_found"] = true;
    fj["symmetric"] = fd.gram == fd.gram.transpose();
    Mat nu = fd.nu;
    uint32_t order = 1;
    Mat acc = nu;
    Mat id = Mat::identity(a->field, a->dim);
    while (!(acc == id) && order <= 64) {
      acc = acc.mul(nu);
      ++order;
    }
    fj["nakayama_is_identity"] = nu == id;
    fj["nakayama_order"] = order <= 64 ? json(order) : json(nullptr);
    j["frobenius"] = fj;
  } catch (const no_form_found_error& e) {
    json fj;
    fj["form_found"] = false;
    fj["exhausted"] = e.exhausted;
    fj["note"] = e.what();
    j["frobenius"] = fj;
  }
  if (o.format == "json") {
    emit(o, j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << "algebra " << j["id"].get<std::string>() << "\n";
    os << "field F_" << j["field"]["q"] << "\n";
    os << "dimension " << j["dimension"] << "\n";
    os << "basis:";
    for (const auto& b : j["basis"]) os << " " << b.get<std::string>();
    os << "\n";
    os << "radical: class=" << j["radical"]["class"].get<std::string>()
       << " dim=" << j["radical"]["dim"] << "\n";
    if (j["frobenius"]["form_found"].get<bool>())
      os << "frobenius: form found, nakayama "
         << (j["frobenius"]["nakayama_is_identity"].get<bool>()
                 ? "identity (symmetric form)"
                 : "nontrivial")
         << "\n";
    else
      os << "frobenius: no form found ("
         << (j["frobenius"]["exhausted"].get<bool>() ? "exhaustive"
                                                     : "sampled")
         << ")\n";
    emit(o, os.str(), out);
  }
  return 0;
}

int cmd_resolve(const CommonOpts& o, const std::string& module_spec,
                const std::string& module_file, std::string& out) {
  AlgPtr a = load_algebra(o);
  ModuleRep m = [&]() {
    if (!module_file.empty()) return load_module_file(module_file, a);
    if (module_spec == "regular") return regular_module(a);
    if (module_spec == "trivial") return trivial_module(a);
    throw parse_error("unknown module spec '" + module_spec +
                      "' (expected trivial|regular or --module-file)");
  }();
  ResolutionChain chain = resolve_chain(m, std::max(o.cutoff, o.dmax));
  ResolutionTable table = table_from_chain(chain, o.cutoff);
  PeriodicityResult per =
      periodicity_from_chain(chain, o.dmax, o.seed, o.trials);
  ComplexityEstimate cx = complexity_estimate(table, per);

  if (o.format == "json") {
    json j;
    j["algebra"] = algebra_summary_json(*a);
    j["module_dim"] = m.dim;
    j["table"] = to_json(table);
    j["periodicity"] = to_json(per);
    j["complexity"] = to_json(cx);
    emit(o, j.dump(2) + "\n", out);
  } else {  // csv (default) and text: the table plus a summary line
    std::ostringstream os;
    os << table_csv(table);
    os << "# c_hat="
       << (cx.c_hat ? std::to_string(*cx.c_hat) : std::string("none"));
    if (cx.period) os << " periodic_d=" << *cx.period;
    os << " evidence_lower_bound=" << cx.evidence_lower_bound << "\n";
    emit(o, os.str(), out);
  }
  return 0;
}

FamilyKind parse_family(const std::string& s) {
  if (s == "M") return FamilyKind::M;
  if (s == "N") return FamilyKind::N;
  throw parse_error("--family must be M or N");
}

int cmd_scan(const CommonOpts& o, const std::string& family, std::string& out) {
  AlgPtr a = load_algebra(o);
  std::vector<FieldSpec> fields = o.fields.empty()
                                      ? default_scan_fields(a->field->p())
                                      : parse_fields_flag(o.fields);
  ScanOptions opt{o.cutoff, o.dmax, o.trials, o.seed, true};
  FamilyReport rep = scan_family(a, parse_family(family), fields, opt);
  emit(o, to_json(rep).dump(2) + "\n", out);
  return 0;
}

Certificate build_certificate(const CommonOpts& o, const std::string& strategy,
                              const std::string& family,
                              const std::string& ideal_expr) {
  AlgPtr a = load_algebra(o);
  ScanOptions opt{o.cutoff, o.dmax, o.trials, o.seed, true};
  if (strategy == "lemma-family") {
    std::vector<FieldSpec> fields = o.fields.empty()
                                        ? default_scan_fields(a->field->p())
                                        : parse_fields_flag(o.fields);
    FamilyReport rep = scan_family(a, parse_family(family), fields, opt);
    return certify_wild_lemma(rep);
  }
  if (strategy == "theorem-growth") {
    return certify_wild_theorem(a, opt);
  }
  if (strategy == "factor") {
    if (ideal_expr.empty())
      throw strategy_mismatch_error("--ideal is required for --strategy factor");
    NcPoly poly = parse_nc_expr(ideal_expr, a->generator_names, *a->field);
    std::vector<std::vector<uint32_t>> gens{a->eval_poly(poly)};
    AlgPtr quot = quotient_by_ideal(*a, gens);
    std::vector<FieldSpec> fields = o.fields.empty()
                                        ? default_scan_fields(a->field->p())
                                        : parse_fields_flag(o.fields);
    FamilyReport rep = scan_family(
        quot, family.empty() ? FamilyKind::M : parse_family(family), fields,
        opt);
    Certificate inner = certify_wild_lemma(rep);
    return certify_factor_rule(a, gens, ideal_expr, inner);
  }
  throw strategy_mismatch_error(
      "--strategy must be lemma-family, theorem-growth or factor");
}

int cmd_certify(const CommonOpts& o, const std::string& strategy,
                const std::string& family, const std::string& ideal_expr,
                bool verify_trail, std::string& out, std::string& err) {
  Certificate cert = build_certificate(o, strategy, family, ideal_expr);
  std::string text = to_json(cert).dump(2) + "\n";
  if (verify_trail) {
    Certificate again = build_certificate(o, strategy, family, ideal_expr);
    std::string text2 = to_json(again).dump(2) + "\n";
    if (text2 != text) {
      err += "trail verification failed: recomputation differs\n";
      return 1;
    }
    err += "trail verified: recomputation is byte-identical\n";
  }
  if (o.format == "text") {
    std::ostringstream os;
    os << "verdict: " << verdict_str(cert.verdict) << "\n";
    os << "strategy: " << cert.strategy << "\n";
    for (const auto& h : cert.unverified_hypotheses)
      os << "hypothesis: " << h << "\n";
    emit(o, os.str(), out);
  } else {
    emit(o, text, out);
  }
  return 0;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  CLI::App app{"homological representation-type toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  uint32_t attempts = 64;
  std::string module_spec = "trivial", module_file;
  std::string family = "M", strategy, ideal_expr;
  bool verify_trail = false;

  auto add_common = [&](CLI::App* cmd, bool seed_required) {
    cmd->add_option("source", o.source,
                    "corpus:NAME or a presentation file path")
        ->required();
    cmd->add_option("--field", o.field, "field override, p or p,e");
    cmd->add_option("--cutoff", o.cutoff, "resolution cutoff N");
    cmd->add_option("--dmax", o.dmax, "periodicity search bound");
    auto* s = cmd->add_option("--seed", o.seed,
                              "seed for randomized search paths");
    if (seed_required) s->required();
    cmd->add_option("--trials", o.trials, "sampling budget");
    cmd->add_option("--format", o.format, "json|csv|text");
    cmd->add_option("--out", o.out_path, "write output to a file");
  };

  CLI::App* c_check = app.add_subcommand(
      "algebra-check", "close a presentation and report its structure");
  add_common(c_check, true);
  c_check->add_option("--attempts", attempts, "Frobenius search budget");

  CLI::App* c_resolve = app.add_subcommand(
      "resolve", "minimal projective resolution and complexity");
  add_common(c_resolve, true);
  c_resolve->add_option("--module", module_spec, "trivial|regular");
  c_resolve->add_option("--module-file", module_file, "module JSON file");

  CLI::App* c_scan =
      app.add_subcommand("scan", "scan a one-parameter module family");
  add_common(c_scan, true);
  c_scan->add_option("--family", family, "M|N")->required();
  c_scan->add_option("--fields", o.fields,
                     "comma-separated prime powers (default p,p^2,p^3)");

  CLI::App* c_certify =
      app.add_subcommand("certify", "emit a representation-type certificate");
  add_common(c_certify, true);
  c_certify->add_option("--strategy", strategy,
                        "lemma-family|theorem-growth|factor")
      ->required();
  c_certify->add_option("--family", family, "M|N");
  c_certify->add_option("--fields", o.fields,
                        "comma-separated prime powers (default p,p^2,p^3)");
  c_certify->add_option("--ideal", ideal_expr,
                        "ideal generator expression for --strategy factor");
  c_certify->add_flag("--verify-trail", verify_trail,
                      "recompute the evidence trail and compare");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    if (e.get_exit_code() == 0) {
      // --help and friends
      res.out = app.help();
      res.code = 0;
      return res;
    }
    msg << e.what() << "\n";
    res.err = msg.str();
    res.code = 1;
    return res;
  }

  try {
    if (c_check->parsed())
      res.code = cmd_algebra_check(o, attempts, res.out);
    else if (c_resolve->parsed())
      res.code = cmd_resolve(o, module_spec, module_file, res.out);
    else if (c_scan->parsed())
      res.code = cmd_scan(o, family, res.out);
    else if (c_certify->parsed())
      res.code = cmd_certify(o, strategy, family, ideal_expr, verify_trail,
                             res.out, res.err);
  } catch (const non_terminating_error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 2;
  } catch (const inconsistent_relations_error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 2;
  } catch (const unsupported_class_error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 3;
  } catch (const unsupported_size_error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 3;
  } catch (const strategy_mismatch_error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 3;
  } catch (const quotient_mismatch_error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 3;
  } catch (const error& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 1;
  } catch (const std::exception& e) {
    res.err += std::string("error: ") + e.what() + "\n";
    res.code = 1;
  }
  return res;
}

}  // namespace wildcert
