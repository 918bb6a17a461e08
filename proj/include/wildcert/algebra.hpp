#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wildcert/matrix.hpp"

namespace wildcert {

/// A word in the free algebra: a sequence of generator indices.
using Word = std::vector<uint8_t>;

/// Length-then-lexicographic order on words (generator index 0 smallest).
/// This is a monomial order: u < v implies aub < avb.
struct DegLexLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

/// Noncommutative polynomial: sorted word -> nonzero field-element index.
using NcPoly = std::map<Word, uint32_t, DegLexLess>;

NcPoly nc_add(const Fq& F, const NcPoly& a, const NcPoly& b);
NcPoly nc_sub(const Fq& F, const NcPoly& a, const NcPoly& b);
NcPoly nc_scale(const Fq& F, const NcPoly& a, uint32_t c);
NcPoly nc_mul(const Fq& F, const NcPoly& a, const NcPoly& b);
NcPoly nc_pow(const Fq& F, const NcPoly& a, uint32_t n);
void nc_add_term(const Fq& F, NcPoly& p, Word w, uint32_t c);
std::string nc_str(const NcPoly& p, const std::vector<std::string>& gens);

/// A finite presentation k<g_1..g_m> / (relations). Relation coefficients
/// are element indices of `field`; `central` lists expressions whose
/// commutators with every generator are appended as relations.
struct Presentation {
  std::string name;
  FieldSpec field;
  std::vector<std::string> generators;
  std::vector<NcPoly> relations;
  std::vector<NcPoly> central;
  uint32_t degree_bound = 12;

  /// Same presentation over another field of equal characteristic. All
  /// coefficients must lie in the prime subfield.
  Presentation with_field(const FieldSpec& f) const;
};

struct AlgebraTable;
using AlgPtr = std::shared_ptr<const AlgebraTable>;

/// A finite-dimensional associative unital algebra given by structure
/// constants over an explicit basis. Basis elements are labeled by words in
/// the distinguished generators; the label set is closed under taking
/// suffixes, and evaluating a label's word in the algebra recovers exactly
/// that basis element. Immutable after construction.
struct AlgebraTable {
  std::string id;
  FqPtr field;
  uint32_t dim = 0;
  std::vector<std::string> generator_names;
  std::vector<Word> basis_words;
  std::vector<uint32_t> sc;  // structure constants, ((i*dim)+j)*dim+m
  std::vector<uint32_t> unit;
  std::vector<std::vector<uint32_t>> gens;  // generator embeddings
  std::vector<NcPoly> relations;            // defining relations if presented

  enum class RadicalClass { Unknown, LocalAugmented, PGroupAlgebra };
  RadicalClass radical_class = RadicalClass::Unknown;
  std::vector<std::vector<uint32_t>> radical;  // basis of rad(A) when known

  uint32_t sc_at(uint32_t i, uint32_t j, uint32_t m) const {
    return sc[(static_cast<size_t>(i) * dim + j) * dim + m];
  }

  std::vector<uint32_t> product(const std::vector<uint32_t>& u,
                                const std::vector<uint32_t>& v) const;
  Mat left_mult(const std::vector<uint32_t>& v) const;
  Mat right_mult(const std::vector<uint32_t>& v) const;
  std::vector<uint32_t> basis_vec(uint32_t i) const;

  /// Evaluates a word in the generators (empty word = unit).
  std::vector<uint32_t> eval_word(const Word& w) const;
  /// Evaluates a relation-style polynomial.
  std::vector<uint32_t> eval_poly(const NcPoly& p) const;

  bool same_table(const AlgebraTable& other) const;
  uint64_t content_hash() const;

  bool is_zero_algebra() const { return dim == 0; }
};

/// Closes a presentation into an explicit table by degree-bounded
/// noncommutative completion (overlap resolution up to degree_bound in the
/// length-lex order), then certifies the result: associativity on all basis
/// triples, every relation evaluating to zero, and the unit acting as a
/// two-sided identity. Certification failure or basis words surviving at
/// the degree bound raise non_terminating_error; a unit in the ideal raises
/// inconsistent_relations_error.
AlgPtr close_presentation(const Presentation& p);

/// Group algebra from a multiplication table (table[i][j] = index of g_i g_j).
/// The table is checked to be a group. Generators are a greedily chosen
/// minimal generating set; basis labels come from a breadth-first walk.
AlgPtr group_algebra(const std::vector<std::vector<uint32_t>>& table,
                     const FieldSpec& field, const std::string& id = "group");

/// Basis of the Jacobson radical for the supported classes (local-augmented
/// tables and p-group algebras in characteristic p). Otherwise throws
/// unsupported_class_error.
const std::vector<std::vector<uint32_t>>& radical_basis(const AlgebraTable& a);

/// Factor algebra by the two-sided ideal generated by the given elements.
/// The result is relabeled by the canonical generator walk. If the ideal
/// contains the unit the zero algebra (dim 0) is returned.
AlgPtr quotient_by_ideal(const AlgebraTable& a,
                         const std::vector<std::vector<uint32_t>>& gens);

/// Relabels to the canonical basis picked by the greedy generator walk in
/// length-lex order. Closure tables are already canonical.
AlgPtr canonical_form(const AlgebraTable& a);

/// The same structure constants over an extension field. Requires the
/// source field to be the prime field of the target.
AlgPtr base_change(const AlgebraTable& a, const FieldSpec& f);

/// Re-generates the table on a new generating set (elements of a). Used for
/// generator-change comparisons; relations are not carried over.
AlgPtr with_generators(
    const AlgebraTable& a,
    const std::vector<std::pair<std::string, std::vector<uint32_t>>>& gens);

uint64_t fnv1a(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull);
std::string hash_hex(uint64_t h);

}  // namespace wildcert
