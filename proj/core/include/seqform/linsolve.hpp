#ifndef SEQFORM_LINSOLVE_HPP
#define SEQFORM_LINSOLVE_HPP

#include "seqform/rational.hpp"

#include <optional>
#include <vector>

namespace seqform {

/// Dense matrix of exact rationals, row major.
using qmatrix = std::vector<std::vector<rational>>;

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row, in order. Deterministic (first nonzero pivot per column).
std::vector<int> rref(qmatrix& m);

/// Solves A x = b exactly. Returns the particular solution with all free
/// variables set to zero, or nullopt if the system is inconsistent.
std::optional<std::vector<rational>> solve(const qmatrix& a, const std::vector<rational>& b);

/// Canonical basis of the nullspace of A (one vector per free column).
std::vector<std::vector<rational>> nullspace(const qmatrix& a, int ncols);

rational determinant(qmatrix m);

} // namespace seqform

#endif
