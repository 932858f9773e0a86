#pragma once

#include <map>
#include <string>

#include "tlbd/diagram.hpp"
#include "tlbd/qfield.hpp"

namespace tlbd {

/// Finite formal Q(q)-linear combination of diagrams sharing (source,
/// target, eps).  Elements of TL(B_n)_eps are the square case.  The zero
/// morphism is the empty map.
struct TLMorphism {
  int source = 0;
  int target = 0;
  int eps = +1;
  std::map<Diagram, RatFunc> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const TLMorphism& o) const {
    return source == o.source && target == o.target && eps == o.eps && terms == o.terms;
  }

  TLMorphism& add_term(const Diagram& d, const RatFunc& c);
  TLMorphism operator+(const TLMorphism& o) const;
  TLMorphism operator-(const TLMorphism& o) const;
  TLMorphism operator*(const RatFunc& c) const;
  TLMorphism operator-() const;

  /// Coefficient of the empty diagram, for scalars extracted from Hom(0,0).
  RatFunc scalar() const;
};

TLMorphism zero_morphism(int m, int k, int eps);
TLMorphism single_diagram(Diagram d, int eps, RatFunc coeff = RatFunc(1));

/// Stacks g on top of f: Hom(m,k) x Hom(k,l) -> Hom(m,l).  Closed loops
/// with even dot parity contribute delta = -eps(q+q^-1) each; a loop with
/// odd parity kills the term.  Throws contract_violation on shape or eps
/// mismatch and closure_violation if a surviving dotted arc loses exposure.
TLMorphism compose(const TLMorphism& f, const TLMorphism& g);

/// Algebra product: a then b read as operators, mul(a,b) = compose(b,a),
/// so psi(mul(a,b)) = psi(a) * psi(b).
inline TLMorphism mul(const TLMorphism& a, const TLMorphism& b) { return compose(b, a); }

/// Appends r undotted vertical strands on the right.
TLMorphism tensor_right_identity(const TLMorphism& f, int r);

/// id^(x)pad (x) f.  Only for dot-free f: strands added on the left would
/// wall-shadow any dotted arc.
TLMorphism tensor_left_identity(int pad, const TLMorphism& f);

// --- generators ------------------------------------------------------------

TLMorphism identity_morphism(int n, int eps);
TLMorphism gen_s0(int n, int eps);          ///< dot on strand 1
TLMorphism gen_u(int i, int n, int eps);    ///< cup-cap at strands i, i+1
TLMorphism gen_u0(int n, int eps);          ///< normal form of s0 U1 s0
/// id_j (x) (k nested cups) (x) id_i in Hom(j+i, j+2k+i).
TLMorphism cup_block(int j, int k, int i, int eps);
/// id_j (x) (k nested caps) (x) id_i in Hom(j+2k+i, j+i).
TLMorphism cap_block(int j, int k, int i, int eps);

/// Images of the Hecke generators: s0 -> s0, H_i -> U_i + eps q^{-eps} id.
enum class HeckeGen { s0, H };
TLMorphism hecke_image(HeckeGen g, int i, int n, int eps);

// --- involution ------------------------------------------------------------

/// Negates every diagram with odd total dot count (s0 -> -s0, U_i -> U_i).
TLMorphism sigma(const TLMorphism& f);

/// True iff every diagram has even dot count, i.e. f lies in TL(D_n).
bool is_type_d(const TLMorphism& f);

/// delta = -eps (q + q^-1), the undotted loop value.
RatFunc loop_value(int eps);

std::string to_string(const TLMorphism& f);

}  // namespace tlbd
