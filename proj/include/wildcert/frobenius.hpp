#pragma once

#include "wildcert/resolution.hpp"

namespace wildcert {

/// A nondegenerate Frobenius functional with its Gram matrix and the
/// Nakayama automorphism nu solving lambda(ab) = lambda(b nu(a)).
struct FrobeniusData {
  AlgPtr A;
  std::vector<uint32_t> functional;  // row over the algebra basis
  Mat gram;                          // G[i][j] = lambda(b_i b_j)
  Mat nu;                            // automorphism matrix on A
  bool exhausted_candidates = false;
};

/// Canonical candidates first (longest-word dual for local-augmented
/// tables, the identity-indicator for group-like tables), then seeded
/// random functionals. Throws no_form_found_error after the budget; the
/// error carries whether the functional space was exhausted (certified
/// evidence that the algebra is not Frobenius) or merely sampled.
FrobeniusData find_frobenius_form(AlgPtr a, uint64_t seed, uint32_t attempts);

/// nu = G^{-1} G^T, verified to be a unital algebra automorphism.
Mat nakayama(const AlgebraTable& a, const Mat& gram);

bool is_algebra_automorphism(const AlgebraTable& a, const Mat& nu);

/// The twisted module: each generator g acts by the action of nu(g).
ModuleRep twist(const ModuleRep& m, const Mat& nu);

/// Auslander-Reiten translate as Omega^2 of the nu-twist (production path).
ModuleRep ar_translate_omega(const ModuleRep& m, const FrobeniusData& fd);

/// Auslander-Reiten translate as D(Tr(m)) from a minimal presentation: the
/// transpose over the opposite algebra followed by vector-space duality.
/// Kept as an independent oracle for the omega path.
ModuleRep ar_translate_dtr(const ModuleRep& m);

}  // namespace wildcert
