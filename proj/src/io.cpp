#include "wildcert/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace wildcert {

namespace {

size_t line_of_offset(const std::string& text, size_t offset) {
  size_t line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(origin + ": line " +
                      std::to_string(line_of_offset(text, e.byte)) + ": " +
                      e.what());
  }
}

uint32_t coeff_from_json(const json& j, const Fq& F, const std::string& where) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  if (j.is_array()) {
    // digits of the element, low to high, over F_p
    uint32_t idx = 0, mult = 1;
    for (const auto& d : j) {
      if (!d.is_number_integer())
        throw parse_error(where + ": coefficient digits must be integers");
      idx += F.from_int(d.get<long long>()) * mult;
      mult *= F.p();
    }
    if (idx >= F.q()) throw parse_error(where + ": coefficient out of range");
    return idx;
  }
  throw parse_error(where + ": coefficient must be an integer or digit array");
}

}  // namespace

json to_json(const FieldSpec& f) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < f.e; ++i) q *= f.p;
  json j;
  j["p"] = f.p;
  j["e"] = f.e;
  j["q"] = q;
  return j;
}

json to_json(const ResolutionTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["n"] = r.n;
    row["b_n"] = r.b_n;
    row["len_Pn"] = r.len_Pn;
    row["dim_syzygy"] = r.dim_syzygy;
    rows.push_back(row);
  }
  json j;
  j["cutoff"] = t.cutoff;
  j["rows"] = rows;
  return j;
}

json to_json(const ComplexityEstimate& e) {
  json j;
  if (e.c_hat)
    j["c_hat"] = *e.c_hat;
  else
    j["c_hat"] = nullptr;
  j["evidence_lower_bound"] = e.evidence_lower_bound;
  if (e.period)
    j["period"] = *e.period;
  else
    j["period"] = nullptr;
  j["certified_finite_projdim"] = e.certified_finite_projdim;
  j["certified_periodic"] = e.certified_periodic;
  j["nonperiodic_to_dmax"] = e.nonperiodic_to_dmax;
  j["tail_strictly_growing"] = e.tail_strictly_growing;
  json w;
  w["start"] = e.window_start;
  w["end"] = e.window_end;
  w["max_ratio_num"] = e.window_max_num;
  w["max_ratio_den"] = e.window_max_den;
  j["window"] = w;
  return j;
}

json to_json(const PeriodicityResult& p) {
  json j;
  if (p.period)
    j["period"] = *p.period;
  else
    j["period"] = nullptr;
  j["unknown_encountered"] = p.unknown_encountered;
  j["dmax"] = p.dmax;
  return j;
}

json to_json(const GrowthEstimate& g) {
  json j;
  j["degree"] = g.degree;
  j["krull_proxy"] = g.krull_proxy;
  return j;
}

json to_json(const FamilyReport& r) {
  json j;
  json alg;
  alg["id"] = r.algebra_id;
  alg["hash"] = r.algebra_hash;
  alg["dim"] = r.algebra_dim;
  j["algebra"] = alg;
  j["family"] = r.kind == FamilyKind::M ? "M" : "N";
  json opt;
  opt["cutoff"] = r.options.cutoff;
  opt["dmax"] = r.options.dmax;
  opt["trials"] = r.options.trials;
  opt["seed"] = r.options.seed;
  opt["run_tau"] = r.options.run_tau;
  j["options"] = opt;
  json fields = json::array();
  for (const auto& f : r.fields) fields.push_back(to_json(f));
  j["fields"] = fields;
  json members = json::array();
  for (const auto& m : r.members) {
    json mj;
    mj["q"] = m.q;
    mj["lambda"] = m.lambda;
    mj["flagged"] = m.flagged;
    if (m.flagged) mj["flag_reason"] = m.flag_reason;
    mj["relations_ok"] = m.relations_ok;
    mj["indecomposable"] = m.indec;
    mj["endo_top_dim"] = m.endo_top_dim;
    mj["iso_class"] = m.iso_class;
    if (m.period)
      mj["period"] = *m.period;
    else
      mj["period"] = nullptr;
    mj["period_unknown"] = m.period_unknown;
    mj["betti"] = m.betti;
    mj["complexity"] = to_json(m.cx);
    if (m.tau_fixed.has_value())
      mj["tau_fixed"] = *m.tau_fixed;
    else
      mj["tau_fixed"] = nullptr;
    mj["module_hash"] = m.module_hash;
    mj["errors"] = m.errors;
    members.push_back(mj);
  }
  j["members"] = members;
  json pf = json::array();
  for (const auto& f : r.per_field) {
    json fj;
    fj["q"] = f.q;
    fj["scanned"] = f.scanned;
    fj["distinct"] = f.distinct;
    pf.push_back(fj);
  }
  j["per_field"] = pf;
  j["warnings"] = r.warnings;
  return j;
}

json to_json(const Certificate& c) {
  json j;
  j["verdict"] = verdict_str(c.verdict);
  j["strategy"] = c.strategy;
  json alg;
  alg["id"] = c.algebra_id;
  alg["hash"] = c.algebra_hash;
  alg["dim"] = c.algebra_dim;
  j["algebra"] = alg;
  json ev = json::array();
  for (const auto& item : c.evidence) {
    json e;
    e["fact"] = item.fact;
    for (const auto& [k, v] : item.details) e[k] = v;
    ev.push_back(e);
  }
  j["evidence"] = ev;
  j["unverified_hypotheses"] = c.unverified_hypotheses;
  if (c.report) j["report"] = to_json(*c.report);
  if (!c.growth_betti.empty()) j["growth_betti"] = c.growth_betti;
  if (c.growth) j["growth"] = to_json(*c.growth);
  if (!c.ideal_desc.empty()) j["ideal"] = c.ideal_desc;
  if (c.quotient_certificate)
    j["quotient_certificate"] = to_json(*c.quotient_certificate);
  return j;
}

json algebra_summary_json(const AlgebraTable& a) {
  json j;
  j["id"] = a.id;
  j["field"] = to_json(a.field->spec());
  j["dimension"] = a.dim;
  json basis = json::array();
  for (const auto& w : a.basis_words) {
    std::string s;
    for (auto g : w) s += a.generator_names.at(g);
    basis.push_back(s.empty() ? "1" : s);
  }
  j["basis"] = basis;
  json rad;
  switch (a.radical_class) {
    case AlgebraTable::RadicalClass::LocalAugmented:
      rad["class"] = "local_augmented";
      break;
    case AlgebraTable::RadicalClass::PGroupAlgebra:
      rad["class"] = "p_group";
      break;
    default:
      rad["class"] = "unknown";
  }
  rad["dim"] = a.radical.size();
  j["radical"] = rad;
  j["hash"] = hash_hex(a.content_hash());
  return j;
}

std::string table_csv(const ResolutionTable& t) {
  std::ostringstream os;
  os << "n,b_n,len_Pn,dim_syzygy\n";
  for (const auto& r : t.rows)
    os << r.n << "," << r.b_n << "," << r.len_Pn << "," << r.dim_syzygy
       << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Expression parsing
// ---------------------------------------------------------------------------

NcPoly parse_nc_expr(const std::string& expr,
                     const std::vector<std::string>& gens, const Fq& F) {
  bool single_letter = true;
  for (const auto& g : gens) single_letter = single_letter && g.size() == 1;

  NcPoly out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i])))
      ++i;
  };
  skip_ws();
  if (i == expr.size()) throw parse_error("empty expression");
  while (i < expr.size()) {
    long long sign = 1;
    skip_ws();
    if (expr[i] == '+') {
      ++i;
    } else if (expr[i] == '-') {
      sign = -1;
      ++i;
    } else if (!out.empty()) {
      throw parse_error("expected '+' or '-' in expression near '" +
                        expr.substr(i) + "'");
    }
    skip_ws();
    uint32_t coeff = F.from_int(sign);
    Word word;
    bool got_factor = false;
    while (i < expr.size() && expr[i] != '+' && expr[i] != '-') {
      skip_ws();
      if (i == expr.size() || expr[i] == '+' || expr[i] == '-') break;
      if (expr[i] == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(expr[i]))) {
        long long n = 0;
        while (i < expr.size() &&
               std::isdigit(static_cast<unsigned char>(expr[i])))
          n = n * 10 + (expr[i++] - '0');
        coeff = F.mul(coeff, F.from_int(n));
        got_factor = true;
        continue;
      }
      // generator name: longest match
      size_t best = 0, best_len = 0;
      for (size_t g = 0; g < gens.size(); ++g) {
        const auto& name = gens[g];
        if (name.size() > best_len && expr.compare(i, name.size(), name) == 0) {
          best = g;
          best_len = name.size();
        }
      }
      if (best_len == 0)
        throw parse_error("unknown generator in expression near '" +
                          expr.substr(i) + "'");
      if (single_letter) best_len = 1;
      i += best_len;
      uint32_t power = 1;
      if (i < expr.size() && expr[i] == '^') {
        ++i;
        if (i == expr.size() ||
            !std::isdigit(static_cast<unsigned char>(expr[i])))
          throw parse_error("expected an exponent after '^'");
        power = 0;
        while (i < expr.size() &&
               std::isdigit(static_cast<unsigned char>(expr[i])))
          power = power * 10 + (expr[i++] - '0');
      }
      for (uint32_t k = 0; k < power; ++k)
        word.push_back(static_cast<uint8_t>(best));
      got_factor = true;
    }
    if (!got_factor) throw parse_error("empty term in expression");
    nc_add_term(F, out, std::move(word), coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// File formats
// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation parse_presentation_json(const std::string& text,
                                     const std::string& origin) {
  json j = parse_json_text(text, origin);
  Presentation pr;
  pr.name = j.value("name", origin);
  if (!j.contains("field") || !j["field"].is_object())
    throw parse_error(origin + ": field 'field' missing or not an object");
  const json& fj = j["field"];
  if (!fj.contains("p")) throw parse_error(origin + ": field.p missing");
  pr.field.p = fj["p"].get<uint32_t>();
  pr.field.e = fj.value("e", 1u);
  if (fj.contains("modulus"))
    pr.field.modulus = fj["modulus"].get<std::vector<uint32_t>>();
  auto F = Fq::make(pr.field);  // validates

  if (!j.contains("generators") || !j["generators"].is_array())
    throw parse_error(origin + ": field 'generators' missing or not an array");
  for (const auto& g : j["generators"]) {
    if (!g.is_string())
      throw parse_error(origin + ": generators must be strings");
    pr.generators.push_back(g.get<std::string>());
  }
  pr.degree_bound = j.value("degree_bound", 12u);

  auto word_from = [&](const json& wj, const std::string& where) {
    Word w;
    for (const auto& entry : wj) {
      if (entry.is_number_integer()) {
        long long idx = entry.get<long long>();
        if (idx < 0 || idx >= static_cast<long long>(pr.generators.size()))
          throw parse_error(where + ": generator index out of range");
        w.push_back(static_cast<uint8_t>(idx));
      } else if (entry.is_string()) {
        auto name = entry.get<std::string>();
        auto it = std::find(pr.generators.begin(), pr.generators.end(), name);
        if (it == pr.generators.end())
          throw parse_error(where + ": unknown generator '" + name + "'");
        w.push_back(static_cast<uint8_t>(it - pr.generators.begin()));
      } else {
        throw parse_error(where + ": word entries must be indices or names");
      }
    }
    return w;
  };

  if (j.contains("relations")) {
    if (!j["relations"].is_array())
      throw parse_error(origin + ": 'relations' must be an array");
    size_t rid = 0;
    for (const auto& rj : j["relations"]) {
      std::string where = origin + ": relations[" + std::to_string(rid++) + "]";
      if (rj.is_string()) {
        pr.relations.push_back(
            parse_nc_expr(rj.get<std::string>(), pr.generators, *F));
        continue;
      }
      if (!rj.is_array())
        throw parse_error(where + ": must be a term list or expression string");
      NcPoly poly;
      for (const auto& tj : rj) {
        if (!tj.is_object() || !tj.contains("coeff") || !tj.contains("word"))
          throw parse_error(where + ": each term needs 'coeff' and 'word'");
        nc_add_term(*F, poly, word_from(tj["word"], where),
                    coeff_from_json(tj["coeff"], *F, where));
      }
      pr.relations.push_back(std::move(poly));
    }
  }
  if (j.contains("central")) {
    if (!j["central"].is_array())
      throw parse_error(origin + ": 'central' must be an array of expressions");
    for (const auto& cj : j["central"]) {
      if (!cj.is_string())
        throw parse_error(origin + ": central entries must be expression strings");
      pr.central.push_back(
          parse_nc_expr(cj.get<std::string>(), pr.generators, *F));
    }
  }
  return pr;
}

Presentation load_presentation_file(const std::string& path) {
  return parse_presentation_json(read_file(path), path);
}

Presentation resolve_presentation_source(const std::string& source) {
  if (source.rfind("corpus:", 0) == 0)
    return corpus_presentation(source.substr(7));
  return load_presentation_file(source);
}

ModuleRep parse_module_json(const std::string& text, AlgPtr algebra,
                            const std::string& origin) {
  json j = parse_json_text(text, origin);
  if (j.contains("algebra_ref")) {
    auto ref = j["algebra_ref"].get<std::string>();
    AlgPtr named = close_presentation(resolve_presentation_source(ref));
    if (named->content_hash() != algebra->content_hash())
      throw parse_error(origin + ": algebra_ref '" + ref +
                        "' does not match the supplied algebra");
  }
  if (!j.contains("dim"))
    throw parse_error(origin + ": field 'dim' missing");
  uint32_t dim = j["dim"].get<uint32_t>();
  if (!j.contains("actions") || !j["actions"].is_object())
    throw parse_error(origin + ": field 'actions' missing or not an object");
  const Fq& F = *algebra->field;
  std::vector<Mat> acts;
  for (size_t g = 0; g < algebra->generator_names.size(); ++g) {
    const std::string& name = algebra->generator_names[g];
    if (!j["actions"].contains(name))
      throw parse_error(origin + ": actions missing generator '" + name + "'");
    const json& mj = j["actions"][name];
    if (!mj.is_array() || mj.size() != dim)
      throw parse_error(origin + ": action of '" + name + "' must be a " +
                        std::to_string(dim) + "-row matrix");
    Mat m(algebra->field, dim, dim);
    for (uint32_t r = 0; r < dim; ++r) {
      const json& row = mj[r];
      if (!row.is_array() || row.size() != dim)
        throw parse_error(origin + ": ragged matrix for '" + name + "'");
      for (uint32_t c = 0; c < dim; ++c) {
        long long v = row[c].get<long long>();
        if (v >= 0 && v < static_cast<long long>(F.q()))
          m.at(r, c) = static_cast<uint32_t>(v);
        else
          m.at(r, c) = F.from_int(v);
      }
    }
    acts.push_back(std::move(m));
  }
  return ModuleRep::make(std::move(algebra), std::move(acts));
}

ModuleRep load_module_file(const std::string& path, AlgPtr algebra) {
  return parse_module_json(read_file(path), std::move(algebra), path);
}

}  // namespace wildcert
