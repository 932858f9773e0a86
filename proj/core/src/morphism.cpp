#include "tlbd/morphism.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "tlbd/errors.hpp"

namespace tlbd {

RatFunc loop_value(int eps) { return RatFunc(-eps) * qint(2); }

TLMorphism& TLMorphism::add_term(const Diagram& d, const RatFunc& c) {
  if (c.is_zero()) return *this;
  auto it = terms.find(d);
  if (it == terms.end()) {
    terms.emplace(d, c);
    return *this;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
  return *this;
}

TLMorphism TLMorphism::operator+(const TLMorphism& o) const {
  if (source != o.source || target != o.target || eps != o.eps)
    throw contract_violation("TLMorphism +: shape/eps mismatch");
  TLMorphism r = *this;
  for (const auto& [d, c] : o.terms) r.add_term(d, c);
  return r;
}

TLMorphism TLMorphism::operator-(const TLMorphism& o) const { return *this + (-o); }

TLMorphism TLMorphism::operator*(const RatFunc& c) const {
  TLMorphism r = zero_morphism(source, target, eps);
  if (c.is_zero()) return r;
  for (const auto& [d, v] : terms) r.terms.emplace(d, v * c);
  return r;
}

TLMorphism TLMorphism::operator-() const { return *this * RatFunc(-1); }

RatFunc TLMorphism::scalar() const {
  Diagram empty{0, 0, {}, {}};
  auto it = terms.find(empty);
  return it == terms.end() ? RatFunc() : it->second;
}

TLMorphism zero_morphism(int m, int k, int eps) {
  TLMorphism f;
  f.source = m;
  f.target = k;
  f.eps = eps;
  return f;
}

TLMorphism single_diagram(Diagram d, int eps, RatFunc coeff) {
  TLMorphism f = zero_morphism(d.bottom, d.top, eps);
  normalize(d);
  f.add_term(d, coeff);
  return f;
}

namespace {

// Node layout for stacking g atop f (f: Hom(m,k), g: Hom(k,l)):
//   0 .. m-1          result bottom, by position
//   m .. m+k-1        glue layer, by horizontal position 1..k
//   m+k .. m+k+l-1    result top, by horizontal position 1..l
struct Stacker {
  int m, k, l;
  std::vector<std::array<int, 2>> adj;   // up to two incident arc ids per node
  std::vector<int> adj_n;
  std::vector<std::pair<int, int>> ends;  // arc id -> node pair
  std::vector<int> arc_dot;

  Stacker(int m_, int k_, int l_) : m(m_), k(k_), l(l_) {
    const size_t n = static_cast<size_t>(m + k + l);
    adj.assign(n, {-1, -1});
    adj_n.assign(n, 0);
  }

  void add_arc(int a, int b, int dot) {
    int id = static_cast<int>(ends.size());
    ends.emplace_back(a, b);
    arc_dot.push_back(dot);
    adj[static_cast<size_t>(a)][static_cast<size_t>(adj_n[static_cast<size_t>(a)]++)] = id;
    adj[static_cast<size_t>(b)][static_cast<size_t>(adj_n[static_cast<size_t>(b)]++)] = id;
  }

  int f_node(int idx) const {        // f boundary index -> node
    if (idx <= m) return idx - 1;
    return m + (k - (idx - m) + 1) - 1;  // top index m+t sits at position k-t+1
  }
  int g_node(int idx) const {        // g boundary index -> node
    if (idx <= k) return m + idx - 1;
    return m + k + (l - (idx - k) + 1) - 1;
  }
};

}  // namespace

TLMorphism compose(const TLMorphism& f, const TLMorphism& g) {
  if (f.eps != g.eps) throw contract_violation("compose: eps mismatch");
  if (f.target != g.source) throw contract_violation("compose: target/source mismatch");
  const int m = f.source, k = f.target, l = g.target;
  TLMorphism out = zero_morphism(m, l, f.eps);
  const RatFunc delta = loop_value(f.eps);

  for (const auto& [df, cf] : f.terms) {
    for (const auto& [dg, cg] : g.terms) {
      Stacker st(m, k, l);
      for (size_t a = 0; a < df.arcs.size(); ++a)
        st.add_arc(st.f_node(df.arcs[a].first), st.f_node(df.arcs[a].second), df.dots[a]);
      for (size_t a = 0; a < dg.arcs.size(); ++a)
        st.add_arc(st.g_node(dg.arcs[a].first), st.g_node(dg.arcs[a].second), dg.dots[a]);

      const int total = m + k + l;
      std::vector<char> arc_used(st.ends.size(), 0);
      Diagram res{m, l, {}, {}};
      int loops = 0;
      bool dead = false;

      auto other_end = [&](int arc, int node) {
        return st.ends[static_cast<size_t>(arc)].first == node
                   ? st.ends[static_cast<size_t>(arc)].second
                   : st.ends[static_cast<size_t>(arc)].first;
      };
      auto next_arc = [&](int node, int arrived_by) {
        const auto& a = st.adj[static_cast<size_t>(node)];
        return a[0] == arrived_by ? a[1] : a[0];
      };
      auto boundary = [&](int node) { return node < m || node >= m + k; };
      auto res_index = [&](int node) {
        if (node < m) return node + 1;                 // bottom
        const int pos = node - (m + k) + 1;            // top, by position
        return m + (l - pos + 1);
      };

      // open components: walk from each unvisited boundary node
      for (int start = 0; start < total && !dead; ++start) {
        if (!boundary(start)) continue;
        int first = st.adj[static_cast<size_t>(start)][0];
        if (first < 0 || arc_used[static_cast<size_t>(first)]) continue;
        int node = start, arc = first, parity = 0;
        while (true) {
          arc_used[static_cast<size_t>(arc)] = 1;
          parity ^= st.arc_dot[static_cast<size_t>(arc)];
          node = other_end(arc, node);
          if (boundary(node)) break;
          arc = next_arc(node, arc);
        }
        res.arcs.emplace_back(res_index(start), res_index(node));
        res.dots.push_back(parity);
      }
      // closed components: whatever is left in the glue layer
      for (size_t a = 0; a < st.ends.size() && !dead; ++a) {
        if (arc_used[a]) continue;
        int node = st.ends[a].first, arc = static_cast<int>(a), parity = 0;
        while (!arc_used[static_cast<size_t>(arc)]) {
          arc_used[static_cast<size_t>(arc)] = 1;
          parity ^= st.arc_dot[static_cast<size_t>(arc)];
          node = other_end(arc, node);
          arc = next_arc(node, arc);
        }
        if (parity & 1)
          dead = true;  // closed dotted loop is zero
        else
          ++loops;
      }
      if (dead) continue;

      normalize(res);
      for (size_t a = 0; a < res.arcs.size(); ++a)
        if (res.dots[a] == 1 && !left_exposed(res, static_cast<int>(a)))
          throw closure_violation("compose: dotted arc lost wall exposure");

      RatFunc c = cf * cg;
      for (int t = 0; t < loops; ++t) c *= delta;
      out.add_term(res, c);
    }
  }
  return out;
}

TLMorphism tensor_right_identity(const TLMorphism& f, int r) {
  if (r < 0) throw contract_violation("tensor_right_identity: negative count");
  if (r == 0) return f;
  const int m = f.source, k = f.target;
  TLMorphism out = zero_morphism(m + r, k + r, f.eps);
  for (const auto& [d, c] : f.terms) {
    Diagram nd{m + r, k + r, {}, {}};
    for (size_t a = 0; a < d.arcs.size(); ++a) {
      auto remap = [&](int idx) { return idx <= m ? idx : idx + 2 * r; };
      nd.arcs.emplace_back(remap(d.arcs[a].first), remap(d.arcs[a].second));
      nd.dots.push_back(d.dots[a]);
    }
    for (int s = 1; s <= r; ++s) {
      // new strand at bottom position m+s, top position k+s
      nd.arcs.emplace_back(m + s, (m + r) + (k + r) - (k + s) + 1);
      nd.dots.push_back(0);
    }
    normalize(nd);
    out.add_term(nd, c);
  }
  return out;
}

TLMorphism tensor_left_identity(int pad, const TLMorphism& f) {
  if (pad < 0) throw contract_violation("tensor_left_identity: negative count");
  if (pad == 0) return f;
  const int s = f.source, t = f.target;
  TLMorphism out = zero_morphism(pad + s, pad + t, f.eps);
  for (const auto& [d, c] : f.terms) {
    Diagram nd{pad + s, pad + t, {}, {}};
    for (int p = 1; p <= pad; ++p) {
      nd.arcs.emplace_back(p, 2 * pad + s + t + 1 - p);
      nd.dots.push_back(0);
    }
    for (size_t a = 0; a < d.arcs.size(); ++a) {
      if (d.dots[a] != 0)
        throw contract_violation("tensor_left_identity: dotted arc would lose the wall");
      nd.arcs.emplace_back(d.arcs[a].first + pad, d.arcs[a].second + pad);
      nd.dots.push_back(0);
    }
    normalize(nd);
    out.add_term(nd, c);
  }
  return out;
}

TLMorphism identity_morphism(int n, int eps) {
  return single_diagram(identity_diagram(n), eps);
}

TLMorphism gen_s0(int n, int eps) {
  if (n < 1) throw contract_violation("gen_s0: n >= 1 required");
  Diagram d = identity_diagram(n);
  for (size_t a = 0; a < d.arcs.size(); ++a)
    if (d.arcs[a].first == 1) d.dots[a] = 1;
  return single_diagram(d, eps);
}

TLMorphism gen_u(int i, int n, int eps) {
  if (i < 1 || i > n - 1) throw contract_violation("gen_u: index out of range");
  Diagram d{n, n, {}, {}};
  auto top = [n](int pos) { return n + (n - pos + 1); };
  d.arcs.emplace_back(i, i + 1);           // cap at bottom positions i, i+1
  d.dots.push_back(0);
  d.arcs.emplace_back(std::min(top(i), top(i + 1)), std::max(top(i), top(i + 1)));
  d.dots.push_back(0);                     // cup at top positions i, i+1
  for (int p = 1; p <= n; ++p) {
    if (p == i || p == i + 1) continue;
    d.arcs.emplace_back(p, top(p));
    d.dots.push_back(0);
  }
  return single_diagram(d, eps);
}

TLMorphism gen_u0(int n, int eps) {
  if (n < 2) throw contract_violation("gen_u0: n >= 2 required");
  TLMorphism u = gen_u(1, n, eps);
  Diagram d = u.terms.begin()->first;
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    auto [i, j] = d.arcs[a];
    // dot both the cap {1,2} and the cup at top positions 1,2
    if ((i == 1 && j == 2) || (i == 2 * n - 1 && j == 2 * n)) d.dots[a] = 1;
  }
  return single_diagram(d, eps);
}

TLMorphism cup_block(int j, int k, int i, int eps) {
  if (j < 0 || k < 0 || i < 0) throw contract_violation("cup_block: negative counts");
  const int m = j + i, t = j + 2 * k + i;
  Diagram d{m, t, {}, {}};
  auto top = [&](int pos) { return m + (t - pos + 1); };
  for (int p = 1; p <= j; ++p) {
    d.arcs.emplace_back(p, top(p));
    d.dots.push_back(0);
  }
  for (int s = 1; s <= k; ++s) {
    // nested: top positions j+s and j+2k+1-s
    int a = top(j + s), b = top(j + 2 * k + 1 - s);
    d.arcs.emplace_back(std::min(a, b), std::max(a, b));
    d.dots.push_back(0);
  }
  for (int s = 1; s <= i; ++s) {
    d.arcs.emplace_back(j + s, top(j + 2 * k + s));
    d.dots.push_back(0);
  }
  return single_diagram(d, eps);
}

TLMorphism cap_block(int j, int k, int i, int eps) {
  if (j < 0 || k < 0 || i < 0) throw contract_violation("cap_block: negative counts");
  const int m = j + 2 * k + i, t = j + i;
  Diagram d{m, t, {}, {}};
  auto top = [&](int pos) { return m + (t - pos + 1); };
  for (int p = 1; p <= j; ++p) {
    d.arcs.emplace_back(p, top(p));
    d.dots.push_back(0);
  }
  for (int s = 1; s <= k; ++s) {
    d.arcs.emplace_back(j + s, j + 2 * k + 1 - s);
    d.dots.push_back(0);
  }
  for (int s = 1; s <= i; ++s) {
    d.arcs.emplace_back(j + 2 * k + s, top(j + s));
    d.dots.push_back(0);
  }
  return single_diagram(d, eps);
}

TLMorphism hecke_image(HeckeGen g, int i, int n, int eps) {
  if (g == HeckeGen::s0) return gen_s0(n, eps);
  const RatFunc shift = RatFunc::monomial(Rational(eps), -eps);
  return gen_u(i, n, eps) + identity_morphism(n, eps) * shift;
}

TLMorphism sigma(const TLMorphism& f) {
  TLMorphism r = zero_morphism(f.source, f.target, f.eps);
  for (const auto& [d, c] : f.terms) {
    int dots = 0;
    for (int b : d.dots) dots += b;
    r.terms.emplace(d, (dots % 2 == 1) ? -c : c);
  }
  return r;
}

bool is_type_d(const TLMorphism& f) {
  for (const auto& [d, c] : f.terms) {
    int dots = 0;
    for (int b : d.dots) dots += b;
    if (dots % 2 != 0) return false;
  }
  return true;
}

std::string to_string(const TLMorphism& f) {
  std::ostringstream out;
  out << "Hom(" << f.source << "," << f.target << ") eps=" << f.eps << " [" << f.terms.size()
      << " terms]";
  for (const auto& [d, c] : f.terms) {
    out << "\n  (" << c.str() << ") *";
    for (size_t a = 0; a < d.arcs.size(); ++a)
      out << " {" << d.arcs[a].first << "," << d.arcs[a].second << (d.dots[a] ? "}*" : "}");
  }
  return out.str();
}

}  // namespace tlbd
