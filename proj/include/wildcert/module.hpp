#pragma once

#include <optional>
#include <string>
#include <utility>

#include "wildcert/algebra.hpp"

namespace wildcert {

/// A finite-dimensional left module given by one action matrix per algebra
/// generator. The checked factory verifies the defining relations (or, for
/// tables without stored relations, that the assignment extends to an
/// algebra homomorphism). Immutable after construction.
struct ModuleRep {
  AlgPtr A;
  uint32_t dim = 0;
  std::vector<Mat> act;

  /// Checked construction; throws relation_violation_error.
  static ModuleRep make(AlgPtr a, std::vector<Mat> actions);
  /// Unchecked construction for values that are valid by construction.
  static ModuleRep internal(AlgPtr a, uint32_t dim, std::vector<Mat> actions);

  uint64_t content_hash() const;
};

/// True iff every defining relation evaluates to zero under the action (and
/// the generator assignment extends to an algebra homomorphism when the
/// table carries no relations).
bool check_relations(const ModuleRep& m);

ModuleRep regular_module(AlgPtr a);
/// The simple top of a local-augmented or p-group algebra.
ModuleRep trivial_module(AlgPtr a);
ModuleRep zero_module(AlgPtr a);

/// Action matrices of all basis elements, by memoized suffix evaluation of
/// the basis labels.
std::vector<Mat> basis_action_matrices(const ModuleRep& m);
/// The vectors (basis element k) . v for all k; avoids materializing the
/// action matrices.
std::vector<std::vector<uint32_t>> basis_actions_on_vector(
    const ModuleRep& m, const std::vector<uint32_t>& v);
/// Action of an arbitrary algebra element.
Mat element_action(const ModuleRep& m, const std::vector<uint32_t>& elem);

/// Basis of all module homomorphisms m -> n, via Kronecker-linearized
/// intertwiner equations. Throws algebra_mismatch_error.
std::vector<Mat> hom_space(const ModuleRep& m, const ModuleRep& n);

enum class IsoVerdict { Yes, No, Unknown };

struct IsoResult {
  IsoVerdict verdict;
  std::optional<Mat> witness;  // invertible intertwiner when Yes
  std::string reason;
};

/// Isomorphism test: exhaustive over the hom space when |F|^dim(Hom) fits
/// the search budget, seeded sampling otherwise. No is definitive (either a
/// dimension/hom obstruction or an exhausted search); Unknown only when
/// sampling fails and exhaustion is infeasible.
IsoResult is_isomorphic(const ModuleRep& m, const ModuleRep& n, uint64_t seed,
                        uint32_t trials);

struct EndoRadical {
  std::vector<Mat> radical;  // basis of rad End(m)
  uint32_t end_dim = 0;
  uint32_t top_dim = 0;  // dim End/rad
};

/// Radical of End(m): trace-form kernel first (certified by a nilpotency
/// audit), exhaustive nilpotent-ideal classification as fallback; throws
/// unsupported_size_error when neither route is feasible.
EndoRadical endo_radical(const ModuleRep& m);

enum class IndecTag {
  AbsolutelyIndecomposable,
  IndecomposableOverBaseField,
  Decomposable
};

struct IndecVerdict {
  IndecTag tag;
  std::optional<Mat> idempotent;  // witness when Decomposable
  uint32_t top_dim = 0;           // dim End/rad
};

IndecVerdict is_indecomposable(const ModuleRep& m, uint64_t seed,
                               uint32_t trials);

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);

/// Image and kernel of an idempotent endomorphism as submodules.
std::pair<ModuleRep, ModuleRep> split_by_idempotent(const ModuleRep& m,
                                                    const Mat& e);

/// Basis of rad(A).m as columns.
Mat radical_image(const ModuleRep& m);

/// m / rad(A).m with the induced actions, and its dimension.
std::pair<ModuleRep, uint32_t> top(const ModuleRep& m);

/// Restriction to an invariant column span (throws if not invariant).
ModuleRep restrict_to_invariant(const ModuleRep& m, const Mat& basis);

}  // namespace wildcert
