#pragma once

#include "cps/lsa.hpp"

namespace cps {

/// Bilinear g-valued form: nabla_{e_i} e_j = sum_k gamma[i][j][k] e_k.
/// Torsion-free / flat are queried, never assumed.
struct Connection {
  LieAlgebra base;
  Tensor3 gamma;

  Vec nabla(const Vec& x, const Vec& y) const;
};

/// T(X,Y) = nabla_X Y - nabla_Y X - [X,Y], as a 3-tensor on the basis.
Tensor3 torsion(const Connection& c);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z;
/// r[i][j][k][l] is the e_l coordinate of R(e_i,e_j)e_k.
Tensor4 curvature(const Connection& c);

bool is_torsion_free(const Connection& c);
bool is_flat(const Connection& c);

/// The canonical connection nabla^CP_X Y = X.Y with the extended product.
Connection cp_connection(const ComplexProductStructure& cps);

/// True iff nabla_x (T y) = T (nabla_x y) for all basis x, y.
bool parallel_check(const Connection& c, const Matrix& t);

/// Whether nabla^CP + d still parallelizes both J and E. Requires d nonzero
/// and symmetric in its first two slots (so the sum stays torsion-free);
/// a correct implementation makes this false for every admissible d.
bool uniqueness_probe(const ComplexProductStructure& cps, const Tensor3& d);

/// nabla^hat_{X+IY}(X'+IY') = (nabla_X X' - nabla_Y Y') + I(nabla_X Y' + nabla_Y X').
Connection extend_to_hat(const Connection& c, const RealifiedComplexification& rc);

/// Sub-connection on the chosen eigenspace in its adapted basis. Throws if the
/// eigenspace is not stable under the connection.
Connection restrict_connection(const Connection& c, const ComplexProductStructure& cps,
                               bool plus_part);

}  // namespace cps
