#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tlbd/linop.hpp"
#include "tlbd/morphism.hpp"
#include "tlbd/report.hpp"

namespace tlbd {

enum class ProjectorKind { A, Bplus, Bminus, D };

std::string kind_name(ProjectorKind k);

/// The Jones-Wenzl projector on n strands, built by its recursion and
/// memoized.  Kind A is the classical one (base: one strand), B+/B- start
/// from (1 +- s0)/2, and D uses its own recursion with the two-strand base
/// id + eps/[2] (U1 + U0).  Thread safe, idempotent fill.
const TLMorphism& jw(ProjectorKind kind, int n, int eps);

/// d_n as b_{n,+} + b_{n,-}; must agree with jw(D, n, eps).
TLMorphism jw_d_via_sum(int n, int eps);

/// Checks, on a supplied candidate p: p^2 = p, p != 0, U_i p = 0 = p U_i,
/// and per kind the s0 / U0 / sigma conditions.
Report characterization_report(const TLMorphism& p, ProjectorKind kind, int n, int eps);

/// characterization_report on the actual projector.
Report verify_characterization(ProjectorKind kind, int n, int eps);

/// Absorption b_n (b_m (x) id) = b_n, red-blue orthogonality, the symmetry
/// b_{n,eta} = (d_n + eta s0 d_n)/2, color absorption d_n A_n = d_n, the
/// sigma swap, d = b+ + b-, and the U_n b_n U_n trace identity.
Report structural_identities(int n, int eps);

/// The extremal-label B-eigenvector chain fixed by psi(jw(B_eta, n, eps)):
/// kappa-eigenvector of eigenvalue eta extended strand by strand away from
/// label zero.  Returns (label, vector).
std::pair<long, Vec> spanning_chain(int eta, int n, int eps);

struct ProjectorImage {
  LinOp op;
  std::vector<std::pair<long, Vec>> fixed;  ///< label + spanning vector(s)
  Report report;
};

/// psi of the projector plus the checks: idempotent, trace = rank (1 for
/// B+-, 2 for D), fixes the spanning vector(s), annihilates every other
/// eigenbasis vector.
ProjectorImage projector_image(ProjectorKind kind, int n, int eps);

}  // namespace tlbd
