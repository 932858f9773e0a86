#include "tlbd/jw.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "tlbd/errors.hpp"
#include "tlbd/rep.hpp"

namespace tlbd {

std::string kind_name(ProjectorKind k) {
  switch (k) {
    case ProjectorKind::A: return "a";
    case ProjectorKind::Bplus: return "b+";
    case ProjectorKind::Bminus: return "b-";
    case ProjectorKind::D: return "d";
  }
  return "?";
}

namespace {

const RatFunc kHalf{Rational(1, 2)};

// eps * (q^{n-1} + q^{-(n-1)}) / (q^n + q^{-n}), the type B/D step weight
RatFunc bd_coefficient(int n, int eps) {
  return RatFunc(eps) * q_pow_sum(n - 1) / q_pow_sum(n);
}

// eps * [n] / [n+1], the type A step weight
RatFunc a_coefficient(int n, int eps) { return RatFunc(eps) * qint(n) / qint(n + 1); }

TLMorphism wenzl_step(const TLMorphism& p, int n, int eps, const RatFunc& coeff) {
  // p on n strands; returns p(x)1 + coeff * (p(x)1) U_n (p(x)1)
  TLMorphism pe = tensor_right_identity(p, 1);
  TLMorphism un = gen_u(n, n + 1, eps);
  return pe + mul(mul(pe, un), pe) * coeff;
}

// each step composes memoized smaller projectors, so depth is linear
TLMorphism build_jw(ProjectorKind kind, int n, int eps) {
  switch (kind) {
    case ProjectorKind::A:
      if (n == 1) return identity_morphism(1, eps);
      return wenzl_step(jw(kind, n - 1, eps), n - 1, eps, a_coefficient(n - 1, eps));
    case ProjectorKind::Bplus:
    case ProjectorKind::Bminus: {
      if (n == 1) {
        const int eta = kind == ProjectorKind::Bplus ? 1 : -1;
        return (identity_morphism(1, eps) + gen_s0(1, eps) * RatFunc(eta)) * kHalf;
      }
      return wenzl_step(jw(kind, n - 1, eps), n - 1, eps, bd_coefficient(n - 1, eps));
    }
    case ProjectorKind::D: {
      if (n == 1) return identity_morphism(1, eps);
      if (n == 2) {
        const RatFunc c = RatFunc(eps) / qint(2);
        return identity_morphism(2, eps) + gen_u(1, 2, eps) * c + gen_u0(2, eps) * c;
      }
      return wenzl_step(jw(kind, n - 1, eps), n - 1, eps, bd_coefficient(n - 1, eps));
    }
  }
  throw contract_violation("jw: unknown kind");
}

}  // namespace

const TLMorphism& jw(ProjectorKind kind, int n, int eps) {
  if (n < 1) throw contract_violation("jw: n >= 1 required");
  if (eps != 1 && eps != -1) throw contract_violation("jw: eps must be +-1");
  using Key = std::tuple<int, int, int>;
  static std::map<Key, TLMorphism> cache;
  static std::mutex lock;
  const Key key{static_cast<int>(kind), n, eps};
  {
    std::scoped_lock g(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  TLMorphism built = build_jw(kind, n, eps);
  std::scoped_lock g(lock);
  return cache.emplace(key, std::move(built)).first->second;
}

TLMorphism jw_d_via_sum(int n, int eps) {
  return jw(ProjectorKind::Bplus, n, eps) + jw(ProjectorKind::Bminus, n, eps);
}

namespace {

std::string diff_note(const TLMorphism& got, const TLMorphism& want) {
  std::ostringstream out;
  out << "got " << got.terms.size() << " terms, want " << want.terms.size();
  return out.str();
}

}  // namespace

Report characterization_report(const TLMorphism& p, ProjectorKind kind, int n, int eps) {
  Report rep;
  const std::string tag = kind_name(kind) + "(" + std::to_string(n) + ")";
  rep.add(tag + " nonzero", !p.is_zero());
  TLMorphism sq = mul(p, p);
  rep.add(tag + " idempotent", sq == p, diff_note(sq, p));
  for (int i = 1; i <= n - 1; ++i) {
    TLMorphism u = gen_u(i, n, eps);
    rep.add(tag + " U_" + std::to_string(i) + " p = 0", mul(u, p).is_zero());
    rep.add(tag + " p U_" + std::to_string(i) + " = 0", mul(p, u).is_zero());
  }
  if (kind == ProjectorKind::Bplus || kind == ProjectorKind::Bminus) {
    const int eta = kind == ProjectorKind::Bplus ? 1 : -1;
    TLMorphism s0 = gen_s0(n, eps);
    rep.add(tag + " s0 p = eta p", mul(s0, p) == p * RatFunc(eta));
    rep.add(tag + " p s0 = eta p", mul(p, s0) == p * RatFunc(eta));
  }
  if (kind == ProjectorKind::D) {
    TLMorphism s0 = gen_s0(n, eps);
    rep.add(tag + " s0 p s0 = p", mul(mul(s0, p), s0) == p);
    if (n >= 2) {
      TLMorphism u0 = gen_u0(n, eps);
      rep.add(tag + " U_0 p = 0", mul(u0, p).is_zero());
      rep.add(tag + " p U_0 = 0", mul(p, u0).is_zero());
    }
    rep.add(tag + " sigma(p) = p", sigma(p) == p);
  }
  return rep;
}

Report verify_characterization(ProjectorKind kind, int n, int eps) {
  return characterization_report(jw(kind, n, eps), kind, n, eps);
}

Report structural_identities(int n, int eps) {
  Report rep;
  const std::string at = "[n=" + std::to_string(n) + ",eps=" + std::to_string(eps) + "] ";
  const TLMorphism& bp = jw(ProjectorKind::Bplus, n, eps);
  const TLMorphism& bm = jw(ProjectorKind::Bminus, n, eps);
  const TLMorphism& d = jw(ProjectorKind::D, n, eps);
  const TLMorphism& a = jw(ProjectorKind::A, n, eps);

  // box absorption on the leftmost strands
  for (int m = 1; m <= n; ++m) {
    TLMorphism bpe = tensor_right_identity(jw(ProjectorKind::Bplus, m, eps), n - m);
    TLMorphism bme = tensor_right_identity(jw(ProjectorKind::Bminus, m, eps), n - m);
    rep.add(at + "b+_n (b+_" + std::to_string(m) + " (x) id) = b+_n", mul(bp, bpe) == bp);
    rep.add(at + "(b+_" + std::to_string(m) + " (x) id) b+_n = b+_n", mul(bpe, bp) == bp);
    rep.add(at + "b+_n (b-_" + std::to_string(m) + " (x) id) = 0", mul(bp, bme).is_zero());
    rep.add(at + "(b-_" + std::to_string(m) + " (x) id) b+_n = 0", mul(bme, bp).is_zero());
  }
  rep.add(at + "b- b+ = 0", mul(bm, bp).is_zero());
  rep.add(at + "b+ b- = 0", mul(bp, bm).is_zero());

  // symmetry and the d decomposition
  TLMorphism s0 = gen_s0(n, eps);
  rep.add(at + "b+ = (d + s0 d)/2", (d + mul(s0, d)) * kHalf == bp);
  rep.add(at + "b- = (d - s0 d)/2", (d - mul(s0, d)) * kHalf == bm);
  rep.add(at + "d = b+ + b-", jw_d_via_sum(n, eps) == d);
  rep.add(at + "sigma(b+) = b-", sigma(bp) == bm);

  // color absorption
  rep.add(at + "d a = d", mul(d, a) == d);
  rep.add(at + "a d = d", mul(a, d) == d);

  // U_n p_n U_n = -eps (q^n+q^-n)/(q^{n-1}+q^{-(n-1)}) U_n (p_{n-1} (x) id)
  if (n >= 2) {
    const RatFunc c = RatFunc(-eps) * q_pow_sum(n) / q_pow_sum(n - 1);
    TLMorphism un = gen_u(n, n + 1, eps);
    for (auto kind : {ProjectorKind::Bplus, ProjectorKind::Bminus, ProjectorKind::D}) {
      TLMorphism pn = tensor_right_identity(jw(kind, n, eps), 1);
      TLMorphism pn1 = tensor_right_identity(jw(kind, n - 1, eps), 2);
      bool ok = mul(mul(un, pn), un) == mul(un, pn1) * c;
      rep.add(at + "U_n " + kind_name(kind) + "_n U_n trace identity", ok);
    }
  }
  return rep;
}

std::pair<long, Vec> spanning_chain(int eta, int n, int eps) {
  // start with the kappa-eigenvector of eigenvalue eta, then repeatedly
  // extend away from zero: eps*m > 0 goes through v_m, otherwise w_m
  long m;
  Vec z;
  if (eta == eps) {
    z = special_vector(SpecialKind::v, 0, eps);
    m = 1;
  } else {
    z = special_vector(SpecialKind::w, 0, eps);
    m = -1;
  }
  for (int t = 2; t <= n; ++t) {
    if (eps * m > 0) {
      z = kron(z, special_vector(SpecialKind::v, m, eps));
      m = eps * m + 1;
    } else {
      z = kron(z, special_vector(SpecialKind::w, m, eps));
      m = eps * m - 1;
    }
  }
  return {m, z};
}

ProjectorImage projector_image(ProjectorKind kind, int n, int eps) {
  if (kind == ProjectorKind::A) throw contract_violation("projector_image: use B+/B-/D");
  ProjectorImage out;
  out.op = psi(jw(kind, n, eps));
  const std::string tag = "psi(" + kind_name(kind) + "_" + std::to_string(n) + ")";
  Report& rep = out.report;

  rep.add(tag + " idempotent", out.op * out.op == out.op);
  const long want_rank = kind == ProjectorKind::D ? 2 : 1;
  rep.add(tag + " trace = rank " + std::to_string(want_rank),
          out.op.trace() == RatFunc(want_rank));

  if (kind == ProjectorKind::D) {
    out.fixed.push_back(spanning_chain(+1, n, eps));
    out.fixed.push_back(spanning_chain(-1, n, eps));
  } else {
    out.fixed.push_back(spanning_chain(kind == ProjectorKind::Bplus ? 1 : -1, n, eps));
  }
  std::vector<long> fixed_labels;
  for (const auto& [label, z] : out.fixed) {
    fixed_labels.push_back(label);
    rep.add(tag + " fixes L(" + std::to_string(label) + ") vector",
            out.op.apply(z) == z);
  }
  for (const auto& [label, z] : eigenbasis(n, eps)) {
    bool is_fixed_label = false;
    for (long fl : fixed_labels) is_fixed_label |= (fl == label);
    if (is_fixed_label) continue;
    if (!out.op.apply(z).is_zero()) {
      rep.add(tag + " annihilates label " + std::to_string(label), false);
      return out;
    }
  }
  rep.add(tag + " annihilates all other eigenvectors", true);
  return out;
}

}  // namespace tlbd
