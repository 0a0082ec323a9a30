#pragma once

#include "cps/connection.hpp"
#include "cps/forms.hpp"
#include "cps/hypercomplex.hpp"

namespace cps {

/// Isomorphism type of a 2-dimensional Lie algebra: abelian or aff(R).
enum class Dim2Type { Abelian, Aff };

Dim2Type dim2_type(const LieAlgebra& g, const Subspace& s);  // requires dim(s) == 2

/// One (J, E) pair stored in a catalog entry, together with the documented
/// expected derived objects used for bit-exact verification.
struct StructureInstance {
  std::string name;
  Matrix j;
  Matrix e;
  // Expected eigenspace spanning vectors (may be linearly dependent at special
  // parameter values; verification checks membership, and span equality when
  // they are independent).
  std::vector<Vec> plus_vectors;
  std::vector<Vec> minus_vectors;
  std::optional<Dim2Type> plus_type, minus_type;
  std::optional<bool> expect_flat;     // flatness of the canonical connection
  std::optional<bool> expect_extends;  // vanishing of the extension obstruction
};

/// A documented hypercomplex structure on a hat entry.
struct HcStructureInstance {
  std::string name;
  Matrix i1;
  Matrix j2;
};

struct CatalogEntry {
  std::string key;
  std::string note;
  LieAlgebra algebra;
  std::vector<StructureInstance> structures;      // complex product structures
  std::vector<HcStructureInstance> hypercomplex;  // hat-entry fixtures
  bool negative = false;
  std::optional<Matrix> stored_j;      // the unique complex structure, if documented
  std::vector<Matrix> invariant_forms; // ad-invariant symmetric forms (evidence entry)
  std::vector<Subspace> decomposition; // stored subspace decomposition, if any
  bool family = false;                 // instantiation requires a CirclePoint
  std::optional<std::string> hat_key;  // entry holding the induced structures on g-hat
};

std::vector<std::string> catalog_keys();

/// Instantiates a catalog entry. Family entries require the half-angle point u;
/// matrices use the full angle obtained by doubling. The E' / E'' families of
/// "A4" exclude theta = pi and are omitted at that parameter.
CatalogEntry catalog_get(const std::string& key, std::optional<CirclePoint> u = {});

/// aff(A) for a caller-supplied bilinear product; throws if A is not an LSA.
CatalogEntry catalog_affA(const BilinearProductSpace& a);

/// Runs the full pipeline (validation, induced LSA, matched-pair round trip,
/// canonical connection, induced hypercomplex, fixture comparison) on every
/// entry at every half-angle sample.
Report catalog_verify_all(const std::vector<CirclePoint>& half_samples);

/// Basis of the space of symmetric bilinear forms b with
/// b([x,y],z) + b(y,[x,z]) = 0 for all x, z.
std::vector<Matrix> invariant_symmetric_forms(const LieAlgebra& g);

}  // namespace cps
