#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tlbd/linop.hpp"
#include "tlbd/morphism.hpp"

namespace tlbd {

enum class QGen { E, F, K, Kinv };

/// Action of E, F, K, K^-1 on the m+1 dimensional type-eps irreducible:
///   E x_i = [m-i+1] x_{i-1},  F x_i = eps [i+1] x_{i+1},
///   K x_i = eps q^{m-2i} x_i.
LinOp irrep_action(int m, int eps, QGen g);

/// The coideal generator B = q^-1 E K^-1 + F on V_eps^{(x) n}, acting as
/// sum_i id^(i-1) (x) B (x) (K^-1)^(n-i).
LinOp b_operator(int n, int eps);

enum class SpecialKind { v, w };

/// v_{n,eps} = x + eps q^{eps n} y,  w_{n,eps} = x - eps q^{-eps n} y.
Vec special_vector(SpecialKind kind, long n, int eps);

/// 2^n B-eigenvectors built by the tensor extension rule: (m, z) extends to
/// (eps m + 1, z (x) v_m) and (eps m - 1, z (x) w_m).  Every pair satisfies
/// b_operator z = [label] z exactly; labels realize multiplicity binom(n,k)
/// at n - 2k.
std::vector<std::pair<long, Vec>> eigenbasis(int n, int eps);

// --- structure maps on V_eps and V_eps (x) V_eps ---------------------------

LinOp kappa(int eps);     ///< x <-> y
LinOp r_matrix(int eps);  ///< Hecke R-matrix on V (x) V
LinOp hbar(int eps);      ///< R - eps q^{-eps} id = cup_map . cap_map
LinOp cap_map(int eps);   ///< Hom(V (x) V, k): x(x)y -> -eps q^-1, y(x)x -> 1
LinOp cup_map(int eps);   ///< Hom(k, V (x) V): 1 -> x(x)y - eps q y(x)x
LinOp mu(int eps);        ///< closure weight diag(-eps q^-1, -eps q)

/// Hecke-algebra generator images on V^(x)n: s0 -> kappa (x) id,
/// H_i -> id (x) R (x) id.
LinOp phi_hecke_s0(int n, int eps);
LinOp phi_hecke_h(int i, int n, int eps);

/// Schur-Weyl functor on morphisms: tensor-network evaluation of each
/// diagram (through arc = identity wire, bottom arc = cap, top arc = cup,
/// dot = kappa at the wall-nearest leg).  psi(mul(a,b)) = psi(a) psi(b).
LinOp psi(const TLMorphism& f);

// --- fusion ----------------------------------------------------------------

/// Multiplicities of the one-dimensional coideal modules L([m]).
struct FusionVector {
  std::map<long, long> mult;  ///< label -> positive multiplicity

  bool operator==(const FusionVector& o) const { return mult == o.mult; }
  void add(long label, long m);
};

/// Iterated Clebsch-Gordan rule L([n]) (x) V_m = sum_k L([n+m-2k]).
FusionVector fuse(const FusionVector& start, const std::vector<long>& irreps);

/// Simples with distinct labels have no Homs and each L([m]) is a line, so
/// dim Hom = sum_m src(m) * tgt(m).
long hom_dim(const FusionVector& src, const FusionVector& tgt);

/// Decomposition of V_{m,eps} over the coideal: {m, m-2, ..., -m}.
FusionVector irrep_fusion(long m);

}  // namespace tlbd
