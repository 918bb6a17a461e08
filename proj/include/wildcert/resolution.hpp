#pragma once

#include "wildcert/module.hpp"

namespace wildcert {

struct ResolutionRow {
  uint32_t n = 0;
  uint32_t b_n = 0;        // projective cover multiplicity in degree n
  uint64_t len_Pn = 0;     // b_n * (composition length of A)
  uint32_t dim_syzygy = 0; // dim of the n-th syzygy (degree 0: the module)
};

struct ResolutionTable {
  uint32_t cutoff = 0;
  std::vector<ResolutionRow> rows;  // n = 0..cutoff
};

struct ResolutionStep {
  uint32_t b = 0;   // cover multiplicity
  Mat epi;          // dim(Omega^n) x (b * dim A)
  Mat kernel;       // (b * dim A) x dim(Omega^{n+1}), embedding of the kernel
  ModuleRep syzygy; // Omega^{n+1}
};

/// A minimal projective resolution computed step by step. steps[n] covers
/// the n-th syzygy; omega(0) is the module itself.
struct ResolutionChain {
  ModuleRep m0;
  std::vector<ResolutionStep> steps;

  const ModuleRep& omega(uint32_t k) const {
    return k == 0 ? m0 : steps.at(k - 1).syzygy;
  }
};

/// Minimal projective cover: P = A^b with b = dim top(m), the epimorphism
/// lifting a basis of the top. Minimality (kernel inside rad P) is checked.
std::pair<ModuleRep, Mat> projective_cover(const ModuleRep& m);

/// Kernel of the projective cover as a module; zero for projectives.
ModuleRep syzygy(const ModuleRep& m);

ResolutionChain resolve_chain(const ModuleRep& m, uint32_t cutoff);
ResolutionTable table_from_chain(const ResolutionChain& c, uint32_t cutoff);
ResolutionTable minimal_resolution(const ModuleRep& m, uint32_t cutoff);

struct PeriodicityResult {
  std::optional<uint32_t> period;
  bool unknown_encountered = false;
  uint32_t dmax = 0;
};

/// Smallest d <= dmax with Omega^d(m) isomorphic to m (exact iso test).
PeriodicityResult is_periodic(const ModuleRep& m, uint32_t dmax, uint64_t seed,
                              uint32_t trials);
PeriodicityResult periodicity_from_chain(const ResolutionChain& c,
                                         uint32_t dmax, uint64_t seed,
                                         uint32_t trials);

/// Complexity estimate from a finite Betti table. Certified facts (exact
/// periodicity, exact zero tails) are kept apart from the heuristic window
/// fit; all comparisons are exact integer arithmetic.
struct ComplexityEstimate {
  std::optional<uint32_t> c_hat;  // smallest c in {0..4} passing the window test
  uint32_t evidence_lower_bound = 0;
  std::optional<uint32_t> period;
  bool certified_finite_projdim = false;
  bool certified_periodic = false;
  bool nonperiodic_to_dmax = false;
  bool tail_strictly_growing = false;  // non-decreasing window with net growth
  uint64_t window_max_num = 0;  // max of b_n / n^{c-1} over the window, exact
  uint64_t window_max_den = 1;
  uint32_t window_start = 0, window_end = 0;
};

ComplexityEstimate complexity_estimate(const ResolutionTable& t,
                                       const PeriodicityResult& p);

/// dim Ext^n(m, k) for n = 0..cutoff over a local-augmented algebra, where
/// minimal covers make these the Betti numbers.
std::vector<uint32_t> ext_dims(const ModuleRep& m, uint32_t cutoff);

/// A degree-n cohomology class of the simple module, given by one
/// coefficient per cover block of P_n (a module map P_n -> k pairs each
/// block with the augmentation).
struct Cocycle {
  uint32_t degree = 0;
  std::vector<uint32_t> block_coeffs;
};

/// Kernel of the induced epimorphism Omega^n(k) -> k determined by a
/// nonzero cocycle; dim = dim Omega^n(k) - 1.
ModuleRep carlson_module(const ResolutionChain& chain_of_simple,
                         const Cocycle& z);

struct GrowthEstimate {
  uint32_t degree = 0;       // polynomial growth degree of the sequence
  uint32_t krull_proxy = 0;  // degree + 1
  std::vector<std::vector<long long>> differences;
};

/// Polynomial degree of a dimension sequence by successive finite
/// differences with a stability window; throws unstable_growth_error when
/// the differences do not stabilize.
GrowthEstimate hilbert_growth(const std::vector<uint32_t>& dims);

}  // namespace wildcert
