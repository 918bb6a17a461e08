#pragma once

#include <memory>

#include "wildcert/frobenius.hpp"

namespace wildcert {

enum class FamilyKind { M, N };

/// The two-dimensional family: x acts by [[0,lambda],[0,0]], y by
/// [[0,1],[0,0]]; any further generators act by zero. Requires the first
/// two generators to be radical and independent modulo rad^2.
ModuleRep family_M(AlgPtr a, uint32_t lambda);

/// The three-dimensional family: x acts by the shift with entries lambda,
/// y by e13; any further generators act by zero. Requires y^2 = 0, x of
/// nilpotency index >= 3 and xy = yx in the algebra.
ModuleRep family_N(AlgPtr a, uint32_t lambda);

struct ScanOptions {
  uint32_t cutoff = 12;
  uint32_t dmax = 10;
  uint32_t trials = 64;
  uint64_t seed = 0;
  bool run_tau = true;
};

struct FamilyMember {
  uint32_t q = 0;
  uint32_t lambda = 0;
  bool flagged = false;
  std::string flag_reason;
  bool relations_ok = false;
  std::string indec;  // "absolutely" | "over_base_field" | "decomposable"
  uint32_t endo_top_dim = 0;
  uint32_t iso_class = 0;
  std::optional<uint32_t> period;
  bool period_unknown = false;
  std::vector<uint32_t> betti;
  ComplexityEstimate cx;
  std::optional<bool> tau_fixed;
  std::string module_hash;
  std::vector<std::string> errors;
};

struct FamilyReport {
  std::string algebra_id;
  std::string algebra_hash;
  uint32_t algebra_dim = 0;
  FamilyKind kind = FamilyKind::M;
  ScanOptions options;
  std::vector<FieldSpec> fields;
  std::vector<FamilyMember> members;  // ordered by (field, lambda)
  struct FieldSummary {
    uint32_t q = 0;
    uint32_t scanned = 0;    // nonflagged members
    uint32_t distinct = 0;   // iso classes among them
  };
  std::vector<FieldSummary> per_field;
  std::vector<std::string> warnings;
};

/// Builds, verifies and measures every family member over every listed
/// field. Per-member failures are recorded, not fatal. Output order is the
/// canonical (field, lambda) order regardless of scheduling.
FamilyReport scan_family(AlgPtr a, FamilyKind kind,
                         const std::vector<FieldSpec>& fields,
                         const ScanOptions& opt);

enum class Verdict { WildEvidence, WildAssumingFg, TameConsistent, Inconclusive };

std::string verdict_str(Verdict v);

struct EvidenceItem {
  std::string fact;
  std::vector<std::pair<std::string, std::string>> details;
};

/// A representation-type verdict with a machine-checkable evidence trail
/// and the explicitly unverified hypotheses it rests on.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::string strategy;
  std::string algebra_id;
  std::string algebra_hash;
  uint32_t algebra_dim = 0;
  std::vector<EvidenceItem> evidence;
  std::vector<std::string> unverified_hypotheses;
  std::optional<FamilyReport> report;        // lemma-family strategy
  std::vector<uint32_t> growth_betti;        // theorem-growth strategy
  std::optional<GrowthEstimate> growth;
  std::string ideal_desc;                    // factor strategy
  std::shared_ptr<Certificate> quotient_certificate;
};

/// Wildness evidence from a one-parameter family scan: all nonflagged
/// members absolutely indecomposable, pairwise non-isomorphic per field, of
/// one fixed dimension, non-periodic with strictly growing Betti tails, and
/// moved by the AR translate. Family-wide periodicity yields TameConsistent.
Certificate certify_wild_lemma(const FamilyReport& r);

/// Wildness assuming Fg: growth degree of the trivial module's Betti table
/// plus one as a Krull-dimension proxy; proxy >= 3 emits WildAssumingFg.
Certificate certify_wild_theorem(AlgPtr a, const ScanOptions& opt);

/// Lifts a wildness certificate of the factor algebra a / (ideal_gens)
/// along the factor-algebra rule. The supplied certificate must match the
/// recomputed quotient (compared by canonical content hash) and must carry
/// a wildness verdict.
Certificate certify_factor_rule(AlgPtr a,
                                const std::vector<std::vector<uint32_t>>& ideal_gens,
                                const std::string& ideal_desc,
                                const Certificate& known);

/// The bundled presentations.
std::vector<Presentation> corpus();
Presentation corpus_presentation(const std::string& name);

}  // namespace wildcert
