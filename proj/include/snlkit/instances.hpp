#pragma once

#include <random>

#include "snlkit/relations.hpp"
#include "snlkit/snl_space.hpp"
#include "snlkit/subspace.hpp"

// Random instances with labels known from construction, for ensembles and
// cross-checks. Nothing here consults the maximality criteria.
namespace snlkit::instances {

using Rng = std::mt19937_64;

/// Haar-ish random orthogonal matrix (QR of a Gaussian matrix, signs fixed).
Matrix random_orthogonal(Eigen::Index n, Rng& rng);

/// Q diag(+1 x plus, -1 x (n - plus)) Q^T.
Matrix random_involution(Eigen::Index n, Eigen::Index plus, Rng& rng, Matrix* q_out = nullptr);

/// Random m x p matrix with spectral norm exactly `norm`.
Matrix random_contraction(Eigen::Index m, Eigen::Index p, double norm, Rng& rng);

struct PositiveInstance {
  SnlSpace space;
  Subspace a;
  bool maximal;
  Eigen::Index plus_dim;  // number of +1 eigenvalues of L
};

/// L = Q D Q^T with D = diag(+-1), and A the graph of a contraction from
/// (a subspace of) the +1 eigenspace into the -1 eigenspace. With the full
/// +1 eigenspace as domain A is maximal; with a proper subspace it is not.
/// Non-maximal instances need plus_dim >= 1, so `maximal = false` forces it.
PositiveInstance random_positive_instance(Rng& rng, Eigen::Index max_dim, bool maximal);

/// M with M + M^T positive semidefinite (random PSD part of random rank plus a
/// random skew part).
Matrix random_monotone_matrix(Eigen::Index d, Rng& rng);

struct RelationInstance {
  LinearRelation relation;
  bool maximal;
};

/// Maximal: {(x, P_U M x + w) : x in U, w in U^perp} for a random subspace U
/// (U = R^d gives the graph of M). Non-maximal: a random proper subspace of
/// such a relation, possibly {0}.
RelationInstance random_relation(Rng& rng, Eigen::Index max_edim, bool maximal);

Vector gaussian(Eigen::Index n, Rng& rng);

/// Random k-dimensional subspace of R^n.
Subspace random_subspace(Eigen::Index n, Eigen::Index k, Rng& rng);

}  // namespace snlkit::instances
