#pragma once

#include "tlbd/report.hpp"

namespace tlbd::verify {

/// TL(B_n) defining relations and Hecke relations, both under diagram
/// composition and under the Schur-Weyl matrices, for n <= max_n, both eps;
/// includes structure_map_checks.
Report relations_suite(int max_n);

/// cup/cap/bubble/snake/reflection/mu identities on V (x) V, both eps.
Report structure_map_checks();

/// Basis counts up to count_max_n, Psi-image full rank up to rank_max_n,
/// the homomorphism test up to hom_max_n, eigenbasis structure up to
/// eigen_max_n.  Pass 0 to skip a block.
Report schur_weyl_suite(int count_max_n, int rank_max_n, int hom_max_n, int eigen_max_n);

/// Fusion-rule and Hom-dimension counting checks.
Report fusion_checks();

/// Projector characterizations, structural identities, example expansions
/// and eigenline identification.
Report jw_suite(int max_n, int image_max_n);

/// Oracle equivalence, base cases, exchange symmetry, trace formula and
/// strand removal identities.
Report theta_suite(int max_abc, int trace_max_n);

}  // namespace tlbd::verify
