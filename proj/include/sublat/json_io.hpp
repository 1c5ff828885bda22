#ifndef SUBLAT_JSON_IO_HPP
#define SUBLAT_JSON_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "sublat/algebra.hpp"
#include "sublat/duality.hpp"
#include "sublat/lattice.hpp"
#include "sublat/matrix.hpp"
#include "sublat/medial.hpp"
#include "sublat/pl.hpp"
#include "sublat/step_function.hpp"
#include "sublat/subspace.hpp"

namespace sublat {

/// Key order is preserved so identical inputs give byte-identical
/// reports.
using Json = nlohmann::ordered_json;

// Serialization. Scalars are strings ("p/q", "/q" dropped when the
// denominator is 1); a complex scalar with nonzero imaginary part is
// {"re": ..., "im": ...}. A matrix is an array of row arrays. A subspace
// is {"ambient", "basis"} with basis a list of coordinate columns; a
// lattice is {"ambient", "nodes"} with one basis per node. Every emitted
// document re-parses to an equal in-memory value.
Json json_of(const Rational& r);
Json json_of(const GaussianRational& z);
Json json_of(const Matrix& m);
Json json_of(const Subspace& s);
Json json_of(const SubspaceLattice& l);
Json json_of(const OperatorAlgebra& a);
Json json_of(const PLBijection& f);
Json json_of(const StepFunction& f);
Json json_of(const ConjugateOperator& c);

// Parsing. Structural problems in the document raise parse_error;
// violated mathematical preconditions (a non-closed lattice, a singular
// coordinate matrix) keep the exception of the library call that
// detects them.
Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Subspace subspace_from_json(const Json& j);

struct FamilyInputs {
  std::size_t ambient = 0;
  std::vector<Subspace> members;
};
/// Same schema as a lattice, but the member list is taken as-is (used by
/// the closure builder, which does not require closedness).
FamilyInputs family_from_json(const Json& j);
SubspaceLattice lattice_from_json(const Json& j);

/// {"ambient", "generators"}: a plain list of square matrices.
std::vector<Matrix> generators_from_json(const Json& j, std::size_t& ambient);

PLBijection pl_from_json(const Json& j);
StepFunction step_from_json(const Json& j);
ConjugateOperator conjugate_from_json(const Json& j);

struct MedialInputs {
  std::size_t m = 0;
  Matrix v3, v1;
};
/// {"m", "v3", "v1"}: the two invertible coordinate matrices that pin a
/// double-triangle realization.
MedialInputs medial_inputs_from_json(const Json& j);
Json json_of(const MedialRealization& r);

/// Hasse diagram in DOT. Nodes appear in canonical lattice order and
/// edges are emitted sorted, so diffs between diagrams are meaningful.
std::string lattice_to_dot(const SubspaceLattice& l);

}  // namespace sublat

#endif
