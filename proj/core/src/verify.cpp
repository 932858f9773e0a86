#include "tlbd/verify.hpp"

#include <functional>
#include <string>
#include <vector>

#include "tlbd/jw.hpp"
#include "tlbd/linop.hpp"
#include "tlbd/morphism.hpp"
#include "tlbd/rep.hpp"
#include "tlbd/theta.hpp"

namespace tlbd::verify {

namespace {

std::string tag(int n, int eps) {
  return "[n=" + std::to_string(n) + ",eps=" + (eps == 1 ? std::string("+1") : std::string("-1")) +
         "] ";
}

const std::vector<Rational> kSamplePoints = {Rational(2), Rational(3), Rational(5, 2),
                                             Rational(7, 3)};

// TL(B_n) relations on any algebra representation of the generators
template <typename Elem>
void tl_relations(Report& rep, const std::string& where, int n, const RatFunc& delta,
                  const std::function<Elem(int)>& u, const Elem& s0, const Elem& one,
                  const std::function<Elem(const Elem&, const Elem&)>& prod,
                  const std::function<Elem(const Elem&, const RatFunc&)>& scale,
                  const std::function<bool(const Elem&, const Elem&)>& eq) {
  for (int i = 1; i <= n - 1; ++i) {
    rep.add(where + "U" + std::to_string(i) + "^2 = delta U" + std::to_string(i),
            eq(prod(u(i), u(i)), scale(u(i), delta)));
    if (i + 1 <= n - 1) {
      rep.add(where + "U U' U = U at " + std::to_string(i),
              eq(prod(prod(u(i), u(i + 1)), u(i)), u(i)));
      rep.add(where + "U' U U' = U' at " + std::to_string(i),
              eq(prod(prod(u(i + 1), u(i)), u(i + 1)), u(i + 1)));
    }
    for (int j = i + 2; j <= n - 1; ++j)
      rep.add(where + "U" + std::to_string(i) + " U" + std::to_string(j) + " commute",
              eq(prod(u(i), u(j)), prod(u(j), u(i))));
  }
  rep.add(where + "s0^2 = 1", eq(prod(s0, s0), one));
  if (n >= 2) rep.add(where + "U1 s0 U1 = 0", eq(prod(prod(u(1), s0), u(1)), scale(one, RatFunc())));
  for (int i = 2; i <= n - 1; ++i)
    rep.add(where + "s0 U" + std::to_string(i) + " commute", eq(prod(s0, u(i)), prod(u(i), s0)));
}

// Hecke relations (H1)-(H3), (BH1)-(BH3)
template <typename Elem>
void hecke_relations(Report& rep, const std::string& where, int n,
                     const std::function<Elem(int)>& h, const Elem& s0, const Elem& one,
                     const std::function<Elem(const Elem&, const Elem&)>& prod,
                     const std::function<Elem(const Elem&, const RatFunc&)>& scale,
                     const std::function<bool(const Elem&, const Elem&)>& eq,
                     const std::function<Elem(const Elem&, const Elem&)>& add) {
  const RatFunc skew = RatFunc::monomial(1, -1) - RatFunc::monomial(1, 1);  // q^-1 - q
  for (int i = 1; i <= n - 1; ++i) {
    rep.add(where + "H" + std::to_string(i) + "^2 = 1 + (q^-1 - q) H",
            eq(prod(h(i), h(i)), add(one, scale(h(i), skew))));
    if (i + 1 <= n - 1)
      rep.add(where + "braid H" + std::to_string(i),
              eq(prod(prod(h(i), h(i + 1)), h(i)), prod(prod(h(i + 1), h(i)), h(i + 1))));
    for (int j = i + 2; j <= n - 1; ++j)
      rep.add(where + "H" + std::to_string(i) + " H" + std::to_string(j) + " commute",
              eq(prod(h(i), h(j)), prod(h(j), h(i))));
  }
  rep.add(where + "s0^2 = 1", eq(prod(s0, s0), one));
  if (n >= 2)
    rep.add(where + "s0 H1 s0 H1 = H1 s0 H1 s0",
            eq(prod(prod(prod(s0, h(1)), s0), h(1)), prod(prod(prod(h(1), s0), h(1)), s0)));
  for (int i = 2; i <= n - 1; ++i)
    rep.add(where + "s0 H" + std::to_string(i) + " commute", eq(prod(s0, h(i)), prod(h(i), s0)));
}

}  // namespace

Report relations_suite(int max_n) {
  Report rep;
  using M = TLMorphism;
  std::function<M(const M&, const M&)> mprod = [](const M& a, const M& b) { return mul(a, b); };
  std::function<M(const M&, const RatFunc&)> mscale = [](const M& a, const RatFunc& c) {
    return a * c;
  };
  std::function<bool(const M&, const M&)> meq = [](const M& a, const M& b) { return a == b; };
  std::function<M(const M&, const M&)> madd = [](const M& a, const M& b) { return a + b; };
  std::function<LinOp(const LinOp&, const LinOp&)> lprod = [](const LinOp& a, const LinOp& b) {
    return a * b;
  };
  std::function<LinOp(const LinOp&, const RatFunc&)> lscale = [](const LinOp& a, const RatFunc& c) {
    return a * c;
  };
  std::function<bool(const LinOp&, const LinOp&)> leq = [](const LinOp& a, const LinOp& b) {
    return a == b;
  };
  std::function<LinOp(const LinOp&, const LinOp&)> ladd = [](const LinOp& a, const LinOp& b) {
    return a + b;
  };

  for (int eps : {1, -1}) {
    for (int n = 1; n <= max_n; ++n) {
      const std::string t = tag(n, eps);
      const RatFunc delta = loop_value(eps);
      // diagrammatic TL relations
      std::function<M(int)> u = [n, eps](int i) { return gen_u(i, n, eps); };
      tl_relations<M>(rep, t + "diagram: ", n, delta, u, gen_s0(n, eps),
                      identity_morphism(n, eps), mprod, mscale, meq);
      // TL relations under Psi
      std::function<LinOp(int)> upsi = [n, eps](int i) { return psi(gen_u(i, n, eps)); };
      tl_relations<LinOp>(rep, t + "psi: ", n, delta, upsi, psi(gen_s0(n, eps)),
                          LinOp::identity(1L << n), lprod, lscale, leq);
      // Hecke relations on hecke_image morphisms
      std::function<M(int)> hm = [n, eps](int i) { return hecke_image(HeckeGen::H, i, n, eps); };
      hecke_relations<M>(rep, t + "hecke(diagram): ", n, hm,
                         hecke_image(HeckeGen::s0, 0, n, eps), identity_morphism(n, eps), mprod,
                         mscale, meq, madd);
      // Hecke relations on the R-matrix images
      std::function<LinOp(int)> hl = [n, eps](int i) { return phi_hecke_h(i, n, eps); };
      hecke_relations<LinOp>(rep, t + "hecke(matrix): ", n, hl, phi_hecke_s0(n, eps),
                             LinOp::identity(1L << n), lprod, lscale, leq, ladd);
    }
  }
  rep.merge(structure_map_checks());
  return rep;
}

Report structure_map_checks() {
  Report rep;
  for (int eps : {1, -1}) {
    const std::string t = std::string("[eps=") + (eps == 1 ? "+1" : "-1") + "] ";
    LinOp cap = cap_map(eps), cup = cup_map(eps), id2 = LinOp::identity(2);
    LinOp hb = hbar(eps);
    rep.add(t + "Hbar = cup . cap", cup * cap == hb);
    rep.add(t + "bubble = -eps(q + q^-1)", (cap * cup).at(0, 0) == loop_value(eps));
    rep.add(t + "dotted bubble = 0", (cap * kron(kappa(eps), id2) * cup).at(0, 0).is_zero());
    LinOp snake1 = kron(cap, id2) * kron(id2, cup);
    LinOp snake2 = kron(id2, cap) * kron(cup, id2);
    rep.add(t + "snake identities", snake1 == id2 && snake2 == id2);
    // reflection equation with the braiding Hbar + q^-1 id
    LinOp rr = hb + LinOp::identity(4) * RatFunc::monomial(1, -1);
    LinOp k1 = kron(kappa(eps), id2);
    rep.add(t + "reflection equation", k1 * rr * k1 * rr == rr * k1 * rr * k1);
    // mu is the single-strand right-closure weight
    LinOp m = mu(eps);
    rep.add(t + "mu weights the single-strand closure",
            m.at(0, 0) + m.at(1, 1) == loop_value(eps) &&
                markov_closure_op(kappa(eps), 1, eps).is_zero());
    // B-equivariance of cup/cap
    rep.add(t + "cap . b_2 = 0", (cap * b_operator(2, eps)).is_zero());
    rep.add(t + "b_2 . cup = 0", (b_operator(2, eps) * cup).is_zero());
  }
  return rep;
}

Report schur_weyl_suite(int count_max_n, int rank_max_n, int hom_max_n, int eigen_max_n) {
  Report rep;
  // basis counts
  for (int n = 1; n <= count_max_n; ++n) {
    long binom = 1;
    for (int t = 1; t <= n; ++t) binom = binom * (n + t) / t;  // C(2n, n)
    rep.add("count |basis(" + std::to_string(n) + "," + std::to_string(n) + ")| = " +
                std::to_string(binom),
            static_cast<long>(enumerate_basis(n, n).size()) == binom);
  }
  rep.add("odd Hom-space is zero", enumerate_basis(1, 2).empty());

  for (int eps : {1, -1}) {
    const std::string e = eps == 1 ? "+1" : "-1";
    // full rank of flattened Psi images
    for (int n = 1; n <= rank_max_n; ++n) {
      auto basis = enumerate_basis(n, n);
      std::vector<std::map<long, RatFunc>> rows;
      rows.reserve(basis.size());
      for (const auto& d : basis) {
        LinOp m = psi(single_diagram(d, eps));
        std::map<long, RatFunc> flat;
        for (long r = 0; r < m.rows; ++r)
          for (const auto& [c, v] : m.row[static_cast<size_t>(r)]) flat.emplace(r * m.cols + c, v);
        rows.push_back(std::move(flat));
      }
      const long want = static_cast<long>(basis.size());
      rep.add("psi rank " + std::to_string(want) + " at n=" + std::to_string(n) + ", eps=" + e,
              rank_rows_at_samples(rows, kSamplePoints) == want);
    }
    // homomorphism / dot convention: all pairs of basis diagrams
    for (int n = 1; n <= hom_max_n; ++n) {
      auto basis = enumerate_basis(n, n);
      std::vector<LinOp> images;
      images.reserve(basis.size());
      for (const auto& d : basis) images.push_back(psi(single_diagram(d, eps)));
      bool ok = true;
      for (size_t x = 0; x < basis.size() && ok; ++x)
        for (size_t y = 0; y < basis.size() && ok; ++y) {
          TLMorphism prod = mul(single_diagram(basis[x], eps), single_diagram(basis[y], eps));
          ok = psi(prod) == images[x] * images[y];
        }
      rep.add("psi is multiplicative on all basis pairs, n=" + std::to_string(n) + ", eps=" + e,
              ok);
    }
    // b_operator commutes with every diagram image
    for (int n = 1; n <= std::min(hom_max_n, 3); ++n) {
      LinOp b = b_operator(n, eps);
      bool ok = true;
      for (const auto& d : enumerate_basis(n, n)) {
        LinOp m = psi(single_diagram(d, eps));
        if (!(m * b == b * m)) {
          ok = false;
          break;
        }
      }
      rep.add("b commutes with psi images, n=" + std::to_string(n) + ", eps=" + e, ok);
    }
    // eigen structure
    for (int n = 1; n <= eigen_max_n; ++n) {
      LinOp b = b_operator(n, eps);
      auto eig = eigenbasis(n, eps);
      bool eigen_ok = true;
      std::map<long, long> mult;
      LinOp basis_matrix(1L << n, 1L << n);
      long col = 0;
      for (const auto& [label, z] : eig) {
        if (!(b.apply(z) == z * qint(label))) eigen_ok = false;
        ++mult[label];
        for (const auto& [r, v] : z.e) basis_matrix.add(r, col, v);
        ++col;
      }
      rep.add("b z = [label] z exactly, n=" + std::to_string(n) + ", eps=" + e, eigen_ok);
      bool mult_ok = true;
      long binom = 1;
      for (int kk = 0; kk <= n; ++kk) {
        auto it = mult.find(n - 2 * kk);
        if (it == mult.end() || it->second != binom) mult_ok = false;
        binom = binom * (n - kk) / (kk + 1);
      }
      rep.add("label multiplicities binom(n,k), n=" + std::to_string(n) + ", eps=" + e,
              mult_ok && static_cast<long>(eig.size()) == (1L << n));
      rep.add("eigenbasis spans, n=" + std::to_string(n) + ", eps=" + e,
              rank_at_samples(basis_matrix, kSamplePoints) == (1L << n));
    }
  }
  return rep;
}

Report fusion_checks() {
  Report rep;
  FusionVector two;
  two.add(2, 1);
  two.add(-2, 1);
  FusionVector ex = fuse(two, {2, 2});
  FusionVector want;
  want.add(6, 1);
  want.add(4, 2);
  want.add(2, 4);
  want.add(0, 4);
  want.add(-2, 4);
  want.add(-4, 2);
  want.add(-6, 1);
  rep.add("fusion of (L[2] + L[-2]) V2 V2", ex == want);
  rep.add("hom_dim((L[2]+L[-2]) V2, V2) = 4", hom_dim(fuse(two, {2}), irrep_fusion(2)) == 4);
  rep.add("hom_dim((L[2]+L[-2]) V2, L[2]+L[-2]) = 2", hom_dim(fuse(two, {2}), two) == 2);
  FusionVector v2v2 = fuse(irrep_fusion(2), {2});
  rep.add("hom_dim(V2 V2, V2) = 3 and (V2 V2, L[2]+L[-2]) = 2 + 3 split",
          hom_dim(v2v2, irrep_fusion(2)) == 7 && hom_dim(v2v2, two) == 4);
  for (int n = 1; n <= 6; ++n) {
    FusionVector start;
    start.add(0, 1);
    FusionVector vn = fuse(start, std::vector<long>(static_cast<size_t>(n), 1));
    long binom2n = 1;
    for (int t = 1; t <= n; ++t) binom2n = binom2n * (n + t) / t;
    rep.add("sum binom(n,k)^2 = binom(2n,n) at n=" + std::to_string(n),
            hom_dim(vn, vn) == binom2n);
  }
  return rep;
}

Report jw_suite(int max_n, int image_max_n) {
  Report rep;
  for (int eps : {1, -1}) {
    for (int n = 1; n <= max_n; ++n) {
      for (auto kind :
           {ProjectorKind::A, ProjectorKind::Bplus, ProjectorKind::Bminus, ProjectorKind::D})
        rep.merge(verify_characterization(kind, n, eps));
      rep.merge(structural_identities(n, eps));
      // d via its own recursion = b+ + b-
      rep.add(tag(n, eps) + "d recursion agrees with b+ + b-",
              jw(ProjectorKind::D, n, eps) == jw_d_via_sum(n, eps));
      rep.add(tag(n, eps) + "d_n lies in TL(D_n)", is_type_d(jw(ProjectorKind::D, n, eps)));
      // <1, s0> component of b+- is (1 +- s0)/2
      Diagram idn = identity_diagram(n);
      Diagram dotted = idn;
      for (size_t a = 0; a < dotted.arcs.size(); ++a)
        if (dotted.arcs[a].first == 1) dotted.dots[a] = 1;
      const RatFunc half{Rational(1, 2)};
      for (auto kind : {ProjectorKind::Bplus, ProjectorKind::Bminus}) {
        const auto& p = jw(kind, n, eps);
        auto cid = p.terms.find(idn);
        auto cdot = p.terms.find(dotted);
        const RatFunc want_dot = kind == ProjectorKind::Bplus ? half : -half;
        rep.add(tag(n, eps) + kind_name(kind) + " head component (1 +- s0)/2",
                cid != p.terms.end() && cid->second == half && cdot != p.terms.end() &&
                    cdot->second == want_dot);
      }
    }
    // the six-term expansion of b+_2
    if (max_n >= 2) {
      const RatFunc half{Rational(1, 2)};
      TLMorphism u1 = gen_u(1, 2, eps), s0m = gen_s0(2, eps);
      TLMorphism want =
          (identity_morphism(2, eps) + s0m) * half +
          (u1 + mul(s0m, u1) + mul(u1, s0m) + gen_u0(2, eps)) *
              (RatFunc(eps) / (RatFunc(2) * qint(2)));
      rep.add(tag(2, eps) + "b+_2 matches its six-term expansion",
              jw(ProjectorKind::Bplus, 2, eps) == want);
    }
    // psi(jw(A,n)) has trace (= rank) n+1
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
      LinOp a = psi(jw(ProjectorKind::A, n, eps));
      rep.add(tag(n, eps) + "psi(a_n) idempotent with trace n+1",
              a * a == a && a.trace() == RatFunc(n + 1));
    }
    for (int n = 1; n <= image_max_n; ++n)
      for (auto kind : {ProjectorKind::Bplus, ProjectorKind::Bminus, ProjectorKind::D})
        rep.merge(projector_image(kind, n, eps).report);
  }
  return rep;
}

Report theta_suite(int max_abc, int trace_max_n) {
  Report rep;
  for (int eps : {1, -1}) {
    const std::string e = eps == 1 ? "+1" : "-1";
    // trace formula
    for (int n = 1; n <= trace_max_n; ++n) {
      RatFunc want = RatFunc(n % 2 == 0 ? 1 : -eps) * q_pow_sum(n);
      rep.add("closure(d_" + std::to_string(n) + ") = (-eps)^n (q^n + q^-n), eps=" + e,
              markov_closure(jw(ProjectorKind::D, n, eps)) == want);
    }
    // oracle equivalence + exchange symmetry on every admissible triple
    for (long a = 0; a <= max_abc; ++a)
      for (long b = 0; b <= max_abc; ++b)
        for (long c = 0; c <= max_abc; ++c) {
          if (!is_admissible(a, b, c)) {
            rep.add("theta_recursive(" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ") = 0 (non-admissible), eps=" + e,
                    theta_recursive(a, b, c, eps).is_zero());
            continue;
          }
          RatFunc m = theta_matrix(a, b, c, eps);
          RatFunc r = theta_recursive(a, b, c, eps);
          rep.add("theta oracle (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + "), eps=" + e,
                  m == r, "matrix " + m.str() + " vs recursive " + r.str());
          if (b != c) {
            RatFunc mx = theta_matrix(a, c, b, eps);
            rep.add("exchange symmetry (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + "), eps=" + e,
                    mx == m);
          }
        }
    // base cases against the oracle
    for (long a = 1; a <= max_abc; ++a) {
      RatFunc s1 = RatFunc(a % 2 == 0 ? 1 : -eps) * q_pow_sum(a);
      rep.add("base (a,0,a) at a=" + std::to_string(a) + ", eps=" + e,
              theta_matrix(a, 0, a, eps) == s1);
      if (is_admissible(a, 1, a - 1))
        rep.add("base (a,1,a-1) at a=" + std::to_string(a) + ", eps=" + e,
                theta_matrix(a, 1, a - 1, eps) == s1);
      if (a >= 1 && is_admissible(a - 1, 1, a) && a - 1 >= 1) {
        RatFunc s3 = RatFunc(a % 2 == 0 ? 1 : -eps) * (qint(a + 1) / qint(a)) * q_pow_sum(a - 1);
        rep.add("base (a-1,1,a) at a=" + std::to_string(a) + ", eps=" + e,
                theta_matrix(a - 1, 1, a, eps) == s3);
      }
    }
  }
  // eps dependence: equal up to sign on the tested range
  for (long a = 0; a <= max_abc; ++a)
    for (long b = 0; b <= max_abc; ++b)
      for (long c = 0; c <= max_abc; ++c) {
        if (!is_admissible(a, b, c)) continue;
        RatFunc plus = theta_recursive(a, b, c, 1);
        RatFunc minus = theta_recursive(a, b, c, -1);
        rep.add("theta(-1) = +-theta(+1) at (" + std::to_string(a) + "," + std::to_string(b) +
                    "," + std::to_string(c) + ")",
                minus == plus || minus == -plus);
      }
  rep.merge(strand_removal_identities(4, 4, 5));
  return rep;
}

}  // namespace tlbd::verify
