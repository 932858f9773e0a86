#include "tlbd/rep.hpp"

#include "tlbd/errors.hpp"

namespace tlbd {

LinOp irrep_action(int m, int eps, QGen g) {
  if (m < 0) throw contract_violation("irrep_action: m >= 0 required");
  const long d = m + 1;
  LinOp op(d, d);
  switch (g) {
    case QGen::E:
      for (long i = 1; i <= m; ++i) op.add(i - 1, i, qint(m - i + 1));
      break;
    case QGen::F:
      for (long i = 0; i < m; ++i) op.add(i + 1, i, RatFunc(eps) * qint(i + 1));
      break;
    case QGen::K:
      for (long i = 0; i <= m; ++i)
        op.add(i, i, RatFunc::monomial(Rational(eps), m - 2 * i));
      break;
    case QGen::Kinv:
      for (long i = 0; i <= m; ++i)
        op.add(i, i, RatFunc::monomial(Rational(eps), 2 * i - m));
      break;
  }
  return op;
}

LinOp b_operator(int n, int eps) {
  if (n < 1) throw contract_violation("b_operator: n >= 1 required");
  const long dim = 1L << n;
  LinOp op(dim, dim);
  for (int i = 1; i <= n; ++i) {
    const long flip = 1L << (n - i);
    for (long c = 0; c < dim; ++c) {
      // B on factor i flips the bit with weight eps; K^-1 weights the tail:
      // x -> eps q^-1 x, y -> eps q y.
      long shift = 0;
      int eps_pow = 1;
      for (int j = i + 1; j <= n; ++j) {
        shift += (c >> (n - j)) & 1 ? 1 : -1;
        eps_pow *= eps;
      }
      op.add(c ^ flip, c, RatFunc::monomial(Rational(eps * eps_pow), shift));
    }
  }
  return op;
}

Vec special_vector(SpecialKind kind, long n, int eps) {
  Vec v;
  v.dim = 2;
  v.e.emplace(0, RatFunc(1));
  if (kind == SpecialKind::v)
    v.e.emplace(1, RatFunc::monomial(Rational(eps), eps * n));
  else
    v.e.emplace(1, RatFunc::monomial(Rational(-eps), -eps * n));
  return v;
}

std::vector<std::pair<long, Vec>> eigenbasis(int n, int eps) {
  if (n < 1) throw contract_violation("eigenbasis: n >= 1 required");
  std::vector<std::pair<long, Vec>> level;
  level.emplace_back(1, special_vector(SpecialKind::v, 0, eps));
  level.emplace_back(-1, special_vector(SpecialKind::w, 0, eps));
  for (int t = 2; t <= n; ++t) {
    std::vector<std::pair<long, Vec>> next;
    next.reserve(level.size() * 2);
    for (const auto& [m, z] : level) {
      next.emplace_back(eps * m + 1, kron(z, special_vector(SpecialKind::v, m, eps)));
      next.emplace_back(eps * m - 1, kron(z, special_vector(SpecialKind::w, m, eps)));
    }
    level = std::move(next);
  }
  return level;
}

LinOp kappa(int eps) {
  (void)eps;
  LinOp k(2, 2);
  k.add(0, 1, RatFunc(1));
  k.add(1, 0, RatFunc(1));
  return k;
}

LinOp r_matrix(int eps) {
  LinOp r(4, 4);
  const RatFunc diag = RatFunc::monomial(Rational(eps), -eps);
  const RatFunc skew = RatFunc::monomial(1, -1) - RatFunc::monomial(1, 1);  // q^-1 - q
  r.add(0, 0, diag);
  r.add(3, 3, diag);
  r.add(2, 1, RatFunc(1));
  r.add(1, 2, RatFunc(1));
  if (eps == -1) r.add(1, 1, skew);
  if (eps == 1) r.add(2, 2, skew);
  return r;
}

LinOp hbar(int eps) {
  return r_matrix(eps) - LinOp::identity(4) * RatFunc::monomial(Rational(eps), -eps);
}

LinOp cap_map(int eps) {
  LinOp c(1, 4);
  c.add(0, 1, RatFunc::monomial(Rational(-eps), -1));
  c.add(0, 2, RatFunc(1));
  return c;
}

LinOp cup_map(int eps) {
  LinOp c(4, 1);
  c.add(1, 0, RatFunc(1));
  c.add(2, 0, RatFunc::monomial(Rational(-eps), 1));
  return c;
}

LinOp mu(int eps) {
  LinOp m(2, 2);
  m.add(0, 0, RatFunc::monomial(Rational(-eps), -1));
  m.add(1, 1, RatFunc::monomial(Rational(-eps), 1));
  return m;
}

LinOp phi_hecke_s0(int n, int eps) {
  return kron(kappa(eps), LinOp::identity(1L << (n - 1)));
}

LinOp phi_hecke_h(int i, int n, int eps) {
  if (i < 1 || i > n - 1) throw contract_violation("phi_hecke_h: index out of range");
  return kron(LinOp::identity(1L << (i - 1)),
              kron(r_matrix(eps), LinOp::identity(1L << (n - i - 1))));
}

namespace {

struct ArcChoice {
  int bits[2];  // bit value at leg 0 / leg 1 (legs in boundary-index order)
  RatFunc value;
};

struct ArcInfo {
  bool leg_bottom[2];
  int leg_phys[2];
  std::vector<ArcChoice> choices;
};

std::vector<ArcChoice> arc_choices(const Diagram& d, size_t a, int eps) {
  const auto [i, j] = d.arcs[a];
  const bool dotted = d.dots[a] == 1;
  const bool bi = d.on_bottom(i), bj = d.on_bottom(j);
  const RatFunc cap_xy = RatFunc::monomial(Rational(-eps), -1);  // -eps q^-1
  const RatFunc cup_yx = RatFunc::monomial(Rational(-eps), 1);   // -eps q
  std::vector<ArcChoice> out;
  if (bi && bj) {  // cap; leg i is the left (wall-nearest) one
    if (!dotted) {
      out.push_back({{0, 1}, cap_xy});
      out.push_back({{1, 0}, RatFunc(1)});
    } else {  // kappa at the left leg
      out.push_back({{1, 1}, cap_xy});
      out.push_back({{0, 0}, RatFunc(1)});
    }
  } else if (!bi && !bj) {  // cup; leg j (larger index) is the left one
    if (!dotted) {
      out.push_back({{1, 0}, RatFunc(1)});   // left 0, right 1
      out.push_back({{0, 1}, cup_yx});       // left 1, right 0
    } else {  // kappa at the left leg
      out.push_back({{1, 1}, RatFunc(1)});
      out.push_back({{0, 0}, cup_yx});
    }
  } else {  // through arc (i bottom, j top since i < j)
    if (!dotted) {
      out.push_back({{0, 0}, RatFunc(1)});
      out.push_back({{1, 1}, RatFunc(1)});
    } else {
      out.push_back({{0, 1}, RatFunc(1)});
      out.push_back({{1, 0}, RatFunc(1)});
    }
  }
  return out;
}

void psi_diagram(const Diagram& d, int eps, const RatFunc& coeff, LinOp& acc) {
  const int m = d.bottom, k = d.top;
  std::vector<ArcInfo> arcs;
  arcs.reserve(d.arcs.size());
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    ArcInfo info;
    const auto [i, j] = d.arcs[a];
    info.leg_bottom[0] = d.on_bottom(i);
    info.leg_bottom[1] = d.on_bottom(j);
    info.leg_phys[0] = d.phys(i);
    info.leg_phys[1] = d.phys(j);
    info.choices = arc_choices(d, a, eps);
    arcs.push_back(std::move(info));
  }
  // walk the cartesian product of per-arc choices; arc counts stay small
  auto rec = [&](auto&& self, size_t a, long row, long col, const RatFunc& val) -> void {
    if (a == arcs.size()) {
      acc.add(row, col, val);
      return;
    }
    const ArcInfo& ai = arcs[a];
    for (const auto& ch : ai.choices) {
      long r = row, c = col;
      for (int leg = 0; leg < 2; ++leg) {
        if (!ch.bits[leg]) continue;
        if (ai.leg_bottom[leg])
          c |= 1L << (m - ai.leg_phys[leg]);
        else
          r |= 1L << (k - ai.leg_phys[leg]);
      }
      self(self, a + 1, r, c, val * ch.value);
    }
  };
  rec(rec, 0, 0, 0, coeff);
}

}  // namespace

LinOp psi(const TLMorphism& f) {
  LinOp acc(1L << f.target, 1L << f.source);
  for (const auto& [d, c] : f.terms) psi_diagram(d, f.eps, c, acc);
  return acc;
}

void FusionVector::add(long label, long m) {
  if (m == 0) return;
  auto it = mult.find(label);
  if (it == mult.end())
    mult.emplace(label, m);
  else {
    it->second += m;
    if (it->second == 0) mult.erase(it);
  }
}

FusionVector fuse(const FusionVector& start, const std::vector<long>& irreps) {
  FusionVector acc = start;
  for (long m : irreps) {
    if (m < 0) throw contract_violation("fuse: negative highest weight");
    FusionVector next;
    for (const auto& [label, mult] : acc.mult)
      for (long k = 0; k <= m; ++k) next.add(label + m - 2 * k, mult);
    acc = std::move(next);
  }
  return acc;
}

long hom_dim(const FusionVector& src, const FusionVector& tgt) {
  long d = 0;
  for (const auto& [label, m] : src.mult) {
    auto it = tgt.mult.find(label);
    if (it != tgt.mult.end()) d += m * it->second;
  }
  return d;
}

FusionVector irrep_fusion(long m) {
  FusionVector f;
  for (long k = 0; k <= m; ++k) f.add(m - 2 * k, 1);
  return f;
}

}  // namespace tlbd
