#pragma once

#include <utility>
#include <vector>

#include "twistorpath/errors.hpp"
#include "twistorpath/intlattice.hpp"

namespace twistorpath {

/// Isometry of an integer lattice.  Row vectors act on the right:
/// x -> x * matrix, and the form is preserved exactly.
struct LatticeIsometry {
  IntegerLattice lattice;
  IMat matrix;

  static LatticeIsometry make(IntegerLattice lat, IMat m) {
    if (m.rows() != lat.rank() || m.cols() != lat.rank())
      throw NotIsometry("matrix shape does not match the lattice rank");
    if (m * lat.gram() * m.transpose() != lat.gram())
      throw NotIsometry("matrix does not preserve the Gram form");
    return LatticeIsometry{std::move(lat), std::move(m)};
  }

  IVec apply(const IVec& x) const { return vec_mat(x, matrix); }
  RVec apply(const RVec& x) const { return vec_mat(x, to_rational(matrix)); }
};

inline LatticeIsometry identity_isometry(const IntegerLattice& lat) {
  return LatticeIsometry{lat, IMat::identity(lat.rank())};
}

inline LatticeIsometry compose(const LatticeIsometry& a, const LatticeIsometry& b) {
  return LatticeIsometry{a.lattice, a.matrix * b.matrix};
}

/// Reflection in a lattice vector of nonzero norm: x -> x - 2(x,λ)/(λ,λ) λ.
/// Integrality of the matrix is checked; a test-isometry constructor, not a
/// geometric operation of the library proper.
inline LatticeIsometry reflection(const IntegerLattice& lat, const IVec& lambda) {
  Int q = lat.norm(lambda);
  if (q == 0) throw InvariantViolation("reflection in an isotropic vector");
  const std::size_t n = lat.rank();
  IMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, Int(0));
    e[i] = 1;
    Int twice = 2 * lat.pair(e, lambda);
    if (twice % q != 0) throw InvariantViolation("reflection is not integral");
    Int f = twice / q;
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = (i == j ? Int(1) : Int(0)) - f * lambda[j];
    }
  }
  return LatticeIsometry::make(lat, std::move(m));
}

/// A fixed positive definite rational 3-space: diagonalize the form and take
/// the first three basis vectors of positive norm, in diagonalization order.
inline RMat reference_positive_3space(const IntegerLattice& lat) {
  Diagonalization d = congruence_diagonalize(to_rational(lat.gram()));
  RMat out(3, lat.rank());
  std::size_t found = 0;
  for (std::size_t i = 0; i < d.diag.size() && found < 3; ++i) {
    if (d.diag[i] > 0) {
      out.set_row(found, d.basis.row(i));
      ++found;
    }
  }
  if (found < 3) throw WrongSignature("lattice has fewer than 3 positive directions");
  return out;
}

/// +1 iff g preserves the orientation of positive definite 3-subspaces:
/// the sign of det of (project back to P) ∘ g ∘ (include P) for the
/// reference positive 3-space P.  Exact rational arithmetic.
inline int orientation_character(const LatticeIsometry& g) {
  Signature sig = signature(g.lattice);
  if (sig.positive != 3 || sig.zero != 0)
    throw WrongSignature("orientation character needs signature (3, r-3)");
  RMat p = reference_positive_3space(g.lattice);
  RMat gr = to_rational(g.lattice.gram());
  RMat gram_p = p * gr * p.transpose();
  RMat gram_p_inv = rat_inverse(gram_p);
  // Column j: coordinates of the projection of g(p_j) onto P.
  RMat comp(3, 3);
  RMat gmat = to_rational(g.matrix);
  for (std::size_t j = 0; j < 3; ++j) {
    RVec image = vec_mat(p.row(j), gmat);
    RVec rhs(3);
    for (std::size_t i = 0; i < 3; ++i) rhs[i] = pair_with(gr, p.row(i), image);
    RVec coords = mat_vec(gram_p_inv, rhs);
    for (std::size_t i = 0; i < 3; ++i) comp(i, j) = coords[i];
  }
  Rat d = det(comp);
  if (d == 0) throw InvariantViolation("projection onto the reference 3-space is singular");
  return d > 0 ? 1 : -1;
}

enum class DiscVerdict { plus_one, minus_one, other };

struct DiscriminantAction {
  DiscVerdict verdict = DiscVerdict::plus_one;
  // Image of each generator in discriminant coordinates.
  std::vector<std::vector<Int>> images;
};

/// The induced action on the discriminant group, with a scalar verdict.
/// Trivial groups act trivially (plus_one).
inline DiscriminantAction discriminant_action(const LatticeIsometry& g) {
  if (g.lattice.is_degenerate()) throw DegenerateLattice("discriminant action needs det != 0");
  DiscriminantGroup disc = discriminant_group(g.lattice);
  DiscriminantAction out;
  if (disc.trivial()) return out;
  bool all_plus = true, all_minus = true;
  for (std::size_t i = 0; i < disc.elementary_divisors.size(); ++i) {
    RVec image = g.apply(disc.generators.row(i));
    std::vector<Int> c = disc.coords(image);
    out.images.push_back(c);
    const Int& d = disc.elementary_divisors[i];
    for (std::size_t t = 0; t < c.size(); ++t) {
      Int expect_plus = (t == i) ? Int(1 % d) : Int(0);
      Int expect_minus = (t == i) ? Int((d - 1) % d) : Int(0);
      if (c[t] != expect_plus) all_plus = false;
      if (c[t] != expect_minus) all_minus = false;
    }
  }
  if (all_plus)
    out.verdict = DiscVerdict::plus_one;
  else if (all_minus)
    out.verdict = DiscVerdict::minus_one;
  else
    out.verdict = DiscVerdict::other;
  return out;
}

enum class MonVerdict { not_mon, mon_cov, mon_not_cov };

/// Membership in Mon(Λ) and its covariant subgroup: orientation character
/// +1 with discriminant action ±1, and mon_cov when the action is trivial.
inline MonVerdict mon_membership(const LatticeIsometry& g) {
  if (orientation_character(g) < 0) return MonVerdict::not_mon;
  DiscriminantAction act = discriminant_action(g);
  switch (act.verdict) {
    case DiscVerdict::plus_one: return MonVerdict::mon_cov;
    case DiscVerdict::minus_one: return MonVerdict::mon_not_cov;
    default: return MonVerdict::not_mon;
  }
}

}  // namespace twistorpath
