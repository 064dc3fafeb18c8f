#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "twistorpath/errors.hpp"
#include "twistorpath/exact.hpp"
#include "twistorpath/matrix.hpp"
#include "twistorpath/numeric.hpp"

namespace twistorpath {

/// A free Z-module of finite rank with an integer Gram matrix.  Values are
/// immutable after construction.  Degenerate Gram matrices are allowed only
/// when explicitly flagged (intermediate sublattice computations); only
/// signature and kernel operations accept them.
class IntegerLattice {
 public:
  static IntegerLattice from_gram(IMat gram, bool allow_degenerate = false) {
    if (!gram.is_symmetric()) throw InvariantViolation("Gram matrix is not symmetric");
    IntegerLattice lat;
    lat.gram_ = std::move(gram);
    lat.degenerate_ = (det(lat.gram_) == 0);
    if (lat.degenerate_ && !allow_degenerate)
      throw DegenerateLattice("Gram matrix has zero determinant");
    return lat;
  }

  std::size_t rank() const { return gram_.rows(); }
  const IMat& gram() const { return gram_; }
  bool is_degenerate() const { return degenerate_; }

  Int pair(const IVec& x, const IVec& y) const { return pair_with(gram_, x, y); }
  Int norm(const IVec& x) const { return pair(x, x); }
  Int determinant() const { return det(gram_); }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram_(i, i) % 2 != 0) return false;
    return true;
  }
  bool is_unimodular() const { return abs_int(determinant()) == 1; }

  bool operator==(const IntegerLattice& o) const { return gram_ == o.gram_; }

 private:
  IntegerLattice() = default;
  IMat gram_;
  bool degenerate_ = false;
};

// --- named lattices --------------------------------------------------------

inline IntegerLattice diagonal_lattice(const std::vector<Int>& d) {
  IMat g(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
  return IntegerLattice::from_gram(std::move(g), true);
}

inline IMat hyperbolic_gram() {
  return IMat{{Int(0), Int(1)}, {Int(1), Int(0)}};
}

inline IMat direct_sum(const IMat& a, const IMat& b) {
  IMat g(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) g(a.rows() + i, a.cols() + j) = b(i, j);
  return g;
}

/// E8 Cartan matrix, rescaled by `scale` (use -1 for the negative definite
/// root lattice occurring in the K3 lattice).
inline IMat e8_gram(int scale = -1) {
  // Chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
  IMat g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  auto bond = [&](std::size_t a, std::size_t b) {
    g(a, b) = -1;
    g(b, a) = -1;
  };
  for (std::size_t i = 0; i + 1 < 7; ++i) bond(i, i + 1);
  bond(4, 7);
  if (scale != 1)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) g(i, j) *= scale;
  return g;
}

/// The K3 lattice U^3 + E8(-1)^2, rank 22, signature (3,19).
inline IMat k3_gram() {
  IMat u = hyperbolic_gram();
  IMat g = direct_sum(direct_sum(u, u), u);
  g = direct_sum(g, e8_gram(-1));
  g = direct_sum(g, e8_gram(-1));
  return g;
}

/// U^3 + <2-2n>: the BBF lattice of a K3^[n]-type manifold with the K3
/// factor truncated to U^3 for desk-scale work.  Rank 7, signature (3,4).
inline IntegerLattice u3_delta_lattice(long n) {
  IMat u = hyperbolic_gram();
  IMat g = direct_sum(direct_sum(u, u), u);
  IMat delta(1, 1);
  delta(0, 0) = Int(2 - 2 * n);
  return IntegerLattice::from_gram(direct_sum(g, delta));
}

// --- sublattices ------------------------------------------------------------

/// A sublattice given by basis rows in ambient coordinates.
struct Sublattice {
  IntegerLattice ambient;
  IMat basis;  // rows, linearly independent
  bool saturated = false;

  std::size_t rank() const { return basis.rows(); }

  IMat restricted_gram() const {
    return basis * ambient.gram() * basis.transpose();
  }

  /// Membership of an ambient vector.
  bool contains(const IVec& x) const {
    auto coeffs = solve_left(to_rational(basis), to_rational(x));
    if (!coeffs) return false;
    if (saturated) return true;
    for (const Rat& c : *coeffs)
      if (denominator(c) != 1) return false;
    return true;
  }

  /// Coordinates of an ambient vector in this basis; throws if absent.
  IVec coordinates(const IVec& x) const {
    auto coeffs = solve_left(to_rational(basis), to_rational(x));
    if (!coeffs) throw InvariantViolation("vector not in sublattice span");
    IVec out(coeffs->size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (denominator((*coeffs)[i]) != 1)
        throw InvariantViolation("vector not in sublattice (fractional coordinates)");
      out[i] = numerator((*coeffs)[i]);
    }
    return out;
  }

  IVec to_ambient(const IVec& coords) const { return vec_mat(coords, basis); }
};

/// Primitive closure: ambient ∩ Q-span(basis), with an HNF-canonical basis.
inline IMat saturate_rows(const IMat& basis) {
  RMat constraints = rat_left_kernel(to_rational(basis).transpose());
  if (constraints.rows() == 0) {
    HnfResult h = hnf(IMat::identity(basis.cols()));
    return h.h;
  }
  IMat cint(constraints.rows(), constraints.cols());
  for (std::size_t i = 0; i < constraints.rows(); ++i) {
    IVec row = primitive_integer_vector(constraints.row(i));
    for (std::size_t j = 0; j < constraints.cols(); ++j) cint(i, j) = row[j];
  }
  return left_integer_kernel(cint.transpose());
}

// --- operations -------------------------------------------------------------

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
};

/// Exact inertia of the Gram form via rational congruence diagonalization.
inline Signature signature(const IntegerLattice& lat) {
  Diagonalization d = congruence_diagonalize(to_rational(lat.gram()));
  Signature s;
  for (const Rat& x : d.diag) {
    if (x > 0)
      ++s.positive;
    else if (x < 0)
      ++s.negative;
    else
      ++s.zero;
  }
  return s;
}

/// Saturated solution lattice {x : mat * x^T = 0} of an integer constraint
/// matrix, as a Sublattice of `lat`.  Basis is HNF-reduced.
inline Sublattice kernel_sublattice(const IntegerLattice& lat, const IMat& constraints) {
  IMat ker = integer_kernel(constraints);
  return Sublattice{lat, ker, true};
}

struct DiscriminantGroup {
  std::vector<Int> elementary_divisors;  // entries > 1, divisor chain
  RMat generators;                       // rows; generator i has order elementary_divisors[i]
  RMat pairing;                          // (g_i, g_j) mod 1, entries in [0,1)
  Int order = 1;

  // Internals for coordinate computations.
  IMat gram;
  IMat gv;  // gram * snf.v
  std::vector<std::size_t> divisor_index;  // positions in the SNF diagonal

  bool trivial() const { return elementary_divisors.empty(); }

  /// Coordinates of x in ⊕ Z/d_i (one entry per elementary divisor > 1).
  /// Requires x in the dual lattice.
  std::vector<Int> coords(const RVec& x) const {
    RVec y = vec_mat(x, to_rational(gv));
    std::vector<Int> out;
    out.reserve(divisor_index.size());
    for (std::size_t t = 0; t < divisor_index.size(); ++t) {
      const Rat& c = y[divisor_index[t]];
      if (denominator(c) != 1)
        throw InvariantViolation("vector is not in the dual lattice");
      Int v = numerator(c) % elementary_divisors[t];
      if (v < 0) v += elementary_divisors[t];
      out.push_back(v);
    }
    return out;
  }
};

inline Rat mod_one(const Rat& x) {
  Rat f = x - Rat(floor_rat(x));
  return f;
}

inline DiscriminantGroup discriminant_group(const IntegerLattice& lat) {
  if (lat.is_degenerate()) throw DegenerateLattice("discriminant group needs det != 0");
  const std::size_t n = lat.rank();
  SnfResult snf = smith_normal_form(lat.gram());
  DiscriminantGroup g;
  g.gram = lat.gram();
  g.gv = lat.gram() * snf.v;
  g.order = 1;
  std::vector<RVec> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = snf.d(i, i);
    g.order *= d;
    if (d <= 1) continue;
    g.elementary_divisors.push_back(d);
    g.divisor_index.push_back(i);
    RVec gen(n);
    for (std::size_t j = 0; j < n; ++j) gen[j] = Rat(snf.u(i, j), d);
    gens.push_back(std::move(gen));
  }
  g.order = abs_int(g.order);
  g.generators = RMat(gens.size(), n);
  for (std::size_t i = 0; i < gens.size(); ++i) g.generators.set_row(i, gens[i]);
  g.pairing = RMat(gens.size(), gens.size());
  RMat gr = to_rational(lat.gram());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      g.pairing(i, j) = mod_one(pair_with(gr, gens[i], gens[j]));
  return g;
}

// --- short vector enumeration ------------------------------------------------

namespace detail {

/// G = L D L^T with L unit lower triangular, for positive definite G.
struct LdlDecomposition {
  RMat l;
  RVec diag;
};

inline LdlDecomposition ldl(const RMat& g) {
  Diagonalization d = congruence_diagonalize(g);
  // For positive definite input the reduction never swaps, so d.basis is
  // unit lower triangular and its inverse gives the Cholesky-style factors.
  LdlDecomposition out;
  out.l = rat_inverse(d.basis);
  out.diag = d.diag;
  return out;
}

inline void enumerate_recursive(const RMat& l, const RVec& diag, const Rat& budget,
                                std::vector<Int>& x, std::size_t level, Rat used,
                                const std::function<void(const IVec&)>& emit) {
  if (level == 0 && used > budget) return;
  std::size_t j = level - 1;
  // z_j = x_j + sum_{i>j} L(i,j) x_i
  Rat offset(0);
  for (std::size_t i = level; i < x.size(); ++i) offset += l(i, j) * Rat(x[i]);
  Rat room = budget - used;
  if (room < 0) return;
  Rat radius2 = room / diag[j];
  Int r = isqrt_floor(radius2);
  Int lo = floor_rat(-offset) - r - 1;
  Int hi = ceil_rat(-offset) + r + 1;
  for (Int v = lo; v <= hi; ++v) {
    Rat z = Rat(v) + offset;
    Rat term = diag[j] * z * z;
    if (term > room) continue;
    x[j] = v;
    if (j == 0) {
      emit(x);
    } else {
      enumerate_recursive(l, diag, budget, x, j, used + term, emit);
    }
  }
  x[j] = 0;
}

}  // namespace detail

/// All lattice vectors with self-pairing in `norms`, one per ± pair (first
/// nonzero coordinate positive), sorted lexicographically.  Requires a
/// definite Gram matrix; bounded Fincke-Pohst style enumeration.
inline std::vector<IVec> enumerate_norm_vectors(const IntegerLattice& lat,
                                                const std::set<Int>& norms) {
  const std::size_t n = lat.rank();
  Signature sig = signature(lat);
  bool positive;
  if (sig.positive == n && sig.zero == 0)
    positive = true;
  else if (sig.negative == n && sig.zero == 0)
    positive = false;
  else
    throw IndefiniteLattice("enumeration requires a definite lattice");

  RMat g = to_rational(lat.gram());
  if (!positive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = -g(i, j);
  }
  Int budget = 0;
  bool any = false;
  for (const Int& t : norms) {
    Int u = positive ? t : Int(-t);
    if (u > 0) {
      any = true;
      budget = std::max(budget, u);
    }
  }
  if (!any) return {};

  detail::LdlDecomposition f = detail::ldl(g);
  std::vector<IVec> found;
  std::vector<Int> x(n, Int(0));
  detail::enumerate_recursive(
      f.l, f.diag, Rat(budget), x, n, Rat(0), [&](const IVec& v) {
        if (is_zero_vec(v)) return;
        // One representative per ± pair.
        int lead = 0;
        for (const Int& c : v) {
          if (c != 0) {
            lead = sign_of(c);
            break;
          }
        }
        if (lead < 0) return;
        if (norms.count(lat.norm(v))) found.push_back(v);
      });
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace twistorpath
