#pragma once

#include <utility>
#include <vector>

#include "twistorpath/errors.hpp"
#include "twistorpath/intlattice.hpp"

namespace twistorpath {

/// H^2 of a K3 surface, or an even unimodular stand-in of smaller rank for
/// fast tests.  Stand-ins are flagged as models.
struct K3LatticeModel {
  IntegerLattice h2;
  bool is_model = false;  // true when h2 is not the full rank-22 K3 lattice

  static K3LatticeModel full() {
    return from_lattice(IntegerLattice::from_gram(k3_gram()));
  }

  static K3LatticeModel from_lattice(IntegerLattice lat) {
    if (!lat.is_even()) throw InvariantViolation("K3 lattice model must be even");
    if (!lat.is_unimodular()) throw InvariantViolation("K3 lattice model must be unimodular");
    K3LatticeModel m;
    m.is_model = (lat.rank() != 22);
    m.h2 = std::move(lat);
    return m;
  }

  /// A stand-in of the given rank built from U and E8(-1) summands.
  /// Supported ranks: 2, 4, 6, 10, 22.
  static K3LatticeModel standard(std::size_t rank) {
    IMat g;
    switch (rank) {
      case 2: g = hyperbolic_gram(); break;
      case 4: g = direct_sum(hyperbolic_gram(), hyperbolic_gram()); break;
      case 6:
        g = direct_sum(direct_sum(hyperbolic_gram(), hyperbolic_gram()), hyperbolic_gram());
        break;
      case 10: g = direct_sum(hyperbolic_gram(), e8_gram(-1)); break;
      case 22: g = k3_gram(); break;
      default: throw InvariantViolation("no standard K3 model of this rank");
    }
    return from_lattice(IntegerLattice::from_gram(std::move(g)));
  }

  std::size_t h2_rank() const { return h2.rank(); }
  bool operator==(const K3LatticeModel& o) const { return h2 == o.h2; }
};

/// Mukai lattice H^0 + H^2 + H^4 with (v, w) = (c_v, c_w) - r_v s_w - r_w s_v.
/// Ambient coordinates are ordered (r, c_1..c_m, s).
inline IntegerLattice mukai_lattice(const K3LatticeModel& model) {
  const std::size_t m = model.h2_rank();
  IMat g(m + 2, m + 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(1 + i, 1 + j) = model.h2.gram()(i, j);
  g(0, m + 1) = -1;
  g(m + 1, 0) = -1;
  return IntegerLattice::from_gram(std::move(g));
}

struct MukaiVector {
  Int r;
  IVec c;
  Int s;

  IVec ambient() const {
    IVec v;
    v.reserve(c.size() + 2);
    v.push_back(r);
    v.insert(v.end(), c.begin(), c.end());
    v.push_back(s);
    return v;
  }

  static MukaiVector from_ambient(const IVec& v) {
    MukaiVector out;
    out.r = v.front();
    out.c.assign(v.begin() + 1, v.end() - 1);
    out.s = v.back();
    return out;
  }

  bool is_zero() const { return r == 0 && s == 0 && is_zero_vec(c); }

  bool is_primitive() const {
    IVec v = ambient();
    return content(v) == 1;
  }

  bool operator==(const MukaiVector& o) const { return r == o.r && s == o.s && c == o.c; }
};

inline void check_model(const K3LatticeModel& model, const MukaiVector& v) {
  if (v.c.size() != model.h2_rank())
    throw ModelMismatch("Mukai vector H^2 component does not match the lattice model");
}

inline Int mukai_pairing(const K3LatticeModel& model, const MukaiVector& v,
                         const MukaiVector& w) {
  check_model(model, v);
  check_model(model, w);
  return model.h2.pair(v.c, w.c) - v.r * w.s - w.r * v.s;
}

/// Mukai vector of a sheaf with the given Chern data: (r, c1, r + c1^2/2 - c2).
inline MukaiVector mukai_vector_from_chern(const K3LatticeModel& model, const Int& r,
                                           const IVec& c1, const Int& c2) {
  if (c1.size() != model.h2_rank()) throw ModelMismatch("c1 does not match the lattice model");
  Int c1sq = model.h2.pair(c1, c1);
  return MukaiVector{r, c1, r + c1sq / 2 - c2};
}

/// The saturated orthogonal complement of v in the Mukai lattice.
inline Sublattice v_perp(const K3LatticeModel& model, const MukaiVector& v) {
  check_model(model, v);
  if (v.is_zero()) throw ZeroVector("v_perp of the zero vector");
  IntegerLattice mukai = mukai_lattice(model);
  IVec amb = v.ambient();
  IMat constraints(1, amb.size());
  IVec row = vec_mat(amb, mukai.gram());
  for (std::size_t j = 0; j < amb.size(); ++j) constraints(0, j) = row[j];
  return kernel_sublattice(mukai, constraints);
}

/// The coset w + (2n-2) * v_perp inside v_perp, stored by one representative.
struct ThetaCoset {
  Sublattice perp;  // v_perp in the Mukai lattice
  IVec rep;         // ambient coordinates, lies in perp
  Int modulus;      // 2n-2

  bool operator==(const ThetaCoset& o) const {
    if (modulus != o.modulus || perp.basis != o.perp.basis) return false;
    // rep - o.rep must lie in modulus * perp.  Both representatives are
    // orthogonal to the defining vector, so after dividing by the modulus
    // membership in the saturated complement reduces to integrality.
    for (std::size_t i = 0; i < rep.size(); ++i)
      if ((rep[i] - o.rep[i]) % modulus != 0) return false;
    return true;
  }
};

inline ThetaCoset negate(const ThetaCoset& t) {
  ThetaCoset out = t;
  for (Int& x : out.rep) x = -x;
  return out;
}

/// Representative of θ'_v: w = v + (2n-2) u with (u, v) = -1, so that
/// (w, v) = 0 and w ≡ v mod (2n-2).  Unimodularity of the Mukai lattice and
/// primitivity of v guarantee u exists.
inline ThetaCoset theta_prime(const K3LatticeModel& model, const MukaiVector& v) {
  check_model(model, v);
  if (!v.is_primitive()) throw NotPrimitive("theta_prime requires a primitive Mukai vector");
  Int square = mukai_pairing(model, v, v);
  if (square < 2 || square % 2 != 0)
    throw WrongSquare("theta_prime requires (v,v) = 2n-2 >= 2");
  IntegerLattice mukai = mukai_lattice(model);
  IVec amb = v.ambient();
  IVec f = vec_mat(amb, mukai.gram());  // the functional (v, .)

  // Solve f . u = -1 by accumulating an extended gcd across the entries.
  const std::size_t n = f.size();
  IVec u(n, Int(0));
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] == 0) continue;
    if (g == 0) {
      g = abs_int(f[i]);
      u[i] = sign_of(f[i]);
      continue;
    }
    // g_new = x * g + y * f[i]
    Int old_r = g, r = abs_int(f[i]);
    Int old_x = 1, x = 0;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_x - q * x;
      old_x = x;
      x = tmp;
    }
    Int coeff_g = old_x;                                    // coefficient of g
    Int coeff_f = (old_r - coeff_g * g) / abs_int(f[i]);    // coefficient of |f[i]|
    for (Int& c : u) c *= coeff_g;
    u[i] += coeff_f * sign_of(f[i]);
    g = old_r;
  }
  if (g != 1) throw NotPrimitive("pairing functional is not surjective");
  // Now f . u = 1; flip to -1.
  for (Int& c : u) c = -c;

  IVec w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = amb[i] + square * u[i];

  ThetaCoset out;
  out.perp = v_perp(model, v);
  out.rep = std::move(w);
  out.modulus = square;
  return out;
}

/// The ordered pair (-θ'_v, θ'_v) mod 2n-2, the lattice shadow of the
/// characteristic class of the modular sheaf.
struct CharClassPair {
  ThetaCoset left;   // sign -1
  ThetaCoset right;  // sign +1

  bool collapses() const { return left == right; }
};

inline CharClassPair char_class_pair(const K3LatticeModel& model, const MukaiVector& v) {
  ThetaCoset t = theta_prime(model, v);
  return CharClassPair{negate(t), t};
}

/// Lattice half of marking compatibility: does the isometry carry θ'_{v1} to
/// θ'_{v2}?  `iso` maps basis coordinates of v1_perp to basis coordinates of
/// v2_perp (rows act on the right: coords -> coords * iso).
inline bool compatible(const K3LatticeModel& model, const MukaiVector& v1,
                       const MukaiVector& v2, const IMat& iso) {
  Int s1 = mukai_pairing(model, v1, v1);
  Int s2 = mukai_pairing(model, v2, v2);
  if (s1 != s2) throw SquareMismatch("Mukai vectors have different squares");
  ThetaCoset t1 = theta_prime(model, v1);
  ThetaCoset t2 = theta_prime(model, v2);
  if (iso.rows() != t1.perp.rank() || iso.cols() != t2.perp.rank())
    throw NotIsometry("matrix shape does not match the orthogonal complements");
  IMat g1 = t1.perp.restricted_gram();
  IMat g2 = t2.perp.restricted_gram();
  if (iso * g2 * iso.transpose() != g1)
    throw NotIsometry("matrix does not carry the v2-perp form to the v1-perp form");
  IVec c1 = t1.perp.coordinates(t1.rep);
  IVec c2 = t2.perp.coordinates(t2.rep);
  IVec image = vec_mat(c1, iso);
  for (std::size_t i = 0; i < image.size(); ++i)
    if ((image[i] - c2[i]) % t1.modulus != 0) return false;
  return true;
}

}  // namespace twistorpath
