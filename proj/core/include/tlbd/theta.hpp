#pragma once

#include <tuple>

#include "tlbd/linop.hpp"
#include "tlbd/morphism.hpp"
#include "tlbd/report.hpp"

namespace tlbd {

/// (a,b,c) is admissible iff i = (b+c-a)/2, j = (a+c-b)/2, k = (a+b-c)/2
/// are all nonnegative integers.
bool is_admissible(long a, long b, long c);

/// The derived triple (i, j, k); throws contract_violation when not
/// admissible.
std::tuple<long, long, long> ijk(long a, long b, long c);

/// Scalar of the right-closure of a square morphism: tr(psi(f) mu^(x)n).
RatFunc markov_closure(const TLMorphism& f);

/// Same on a matrix already in the Schur-Weyl picture.
RatFunc markov_closure_op(const LinOp& m, int n, int eps);

/// Close only the last strand: End(V^(x)n) -> End(V^(x)(n-1)) weighted by mu.
LinOp partial_markov_closure(const LinOp& m, int n, int eps);

/// Brute-force network evaluation: closure of
///   cup_block(j,k,i) . A_c . cap_block(j,k,i) . (d_a (x) A_b)
/// computed entirely at the matrix level.  This is the oracle the recursive
/// evaluator is measured against.  a = 0 degenerates to the type A closure
/// of A_b (admissibility forces b = c).  Throws on non-admissible input and
/// on networks wider than 12 strands (the oracle is for desk scale).
RatFunc theta_matrix(long a, long b, long c, int eps);

/// Recursive evaluator.  Non-admissible triples evaluate to 0; admissible
/// ones by: a = 0 -> (-eps)^b [b+1]; b = 0 or i = 0 -> (-eps)^a (q^a+q^-a);
/// b = 1, c = a+1 -> (-eps)^{a+1} [a+2]/[a+1] (q^a + q^-a); c <= 1 -> swap
/// b and c; otherwise
///   -eps [c+1]/[c] theta(a,b-1,c-1) + eps [k]^2/([b][b-1]) theta(a,b-2,c).
/// Memoized; equals theta_matrix on every admissible triple in the tested
/// range.
RatFunc theta_recursive(long a, long b, long c, int eps);

/// Strand removal identities as matrix checks:
///  - closing the last strand of A_s gives -eps [s+1]/[s] A_{s-1}
///    (2 <= s <= max_a);
///  - U_n d_n U_n = -eps (q^n+q^-n)/(q^{n-1}+q^{-(n-1)}) U_n (d_{n-1} (x) id)
///    (2 <= n <= max_d);
///  - the wrap-around three-projector identity with coefficient
///    eps^{j-1} [i]/[i+j-1], for i,j >= 1, k >= 0 with all boxes at most
///    max_box strands, verified by structural equality of morphisms and by
///    psi on the smallest cases.
Report strand_removal_identities(int max_a, int max_d, int max_box);

/// Left side of the wrap-around identity, as a composed morphism
/// Hom((i+j-2) + (j+k), i+k); public so tests can exercise the wiring.
TLMorphism strand_relocation_lhs(int i, int j, int k, int eps);
/// Right side before scaling: A_{i+k} . (id (x) caps (x) id) . (A_{i+j-2} (x) A_{j+k}).
TLMorphism strand_relocation_rhs(int i, int j, int k, int eps);

}  // namespace tlbd
