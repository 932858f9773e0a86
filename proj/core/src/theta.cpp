#include "tlbd/theta.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "tlbd/errors.hpp"
#include "tlbd/jw.hpp"
#include "tlbd/rep.hpp"

namespace tlbd {

bool is_admissible(long a, long b, long c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return b + c >= a && a + c >= b && a + b >= c;
}

std::tuple<long, long, long> ijk(long a, long b, long c) {
  if (!is_admissible(a, b, c)) throw contract_violation("ijk: triple not admissible");
  return {(b + c - a) / 2, (a + c - b) / 2, (a + b - c) / 2};
}

namespace {

// weight of closing basis state idx on n strands: (-eps)^n q^{#y - #x}
RatFunc closure_weight(long idx, int n, int eps) {
  const int ones = std::popcount(static_cast<unsigned long long>(idx));
  const Rational sign(n % 2 == 0 ? 1 : -eps);
  return RatFunc::monomial(sign, 2L * ones - n);
}

}  // namespace

RatFunc markov_closure_op(const LinOp& m, int n, int eps) {
  if (m.rows != m.cols || m.rows != (1L << n))
    throw contract_violation("markov_closure_op: shape mismatch");
  RatFunc acc;
  for (long i = 0; i < m.rows; ++i) {
    RatFunc d = m.at(i, i);
    if (!d.is_zero()) acc += d * closure_weight(i, n, eps);
  }
  return acc;
}

RatFunc markov_closure(const TLMorphism& f) {
  if (f.source != f.target) throw contract_violation("markov_closure: square morphism required");
  return markov_closure_op(psi(f), f.source, f.eps);
}

LinOp partial_markov_closure(const LinOp& m, int n, int eps) {
  if (m.rows != m.cols || m.rows != (1L << n) || n < 1)
    throw contract_violation("partial_markov_closure: shape mismatch");
  const RatFunc w0 = RatFunc::monomial(Rational(-eps), -1);
  const RatFunc w1 = RatFunc::monomial(Rational(-eps), 1);
  LinOp out(1L << (n - 1), 1L << (n - 1));
  for (long r = 0; r < m.rows; ++r) {
    for (const auto& [c, v] : m.row[static_cast<size_t>(r)]) {
      if ((r & 1) != (c & 1)) continue;
      out.add(r >> 1, c >> 1, v * ((r & 1) ? w1 : w0));
    }
  }
  return out;
}

RatFunc theta_matrix(long a, long b, long c, int eps) {
  if (!is_admissible(a, b, c)) throw contract_violation("theta_matrix: triple not admissible");
  if (a + b > 12)
    throw contract_violation(
        "theta_matrix: network spans more than 12 strands; use theta_recursive");
  if (a == 0) {
    // degenerate network: closure of the type A projector on b = c strands
    if (b == 0) return RatFunc(1);
    return markov_closure(jw(ProjectorKind::A, static_cast<int>(b), eps));
  }
  const auto [i, j, k] = ijk(a, b, c);
  const int ji = static_cast<int>(j), ki = static_cast<int>(k), ii = static_cast<int>(i);
  LinOp bottom = psi(jw(ProjectorKind::D, static_cast<int>(a), eps));
  if (b > 0) bottom = kron(bottom, psi(jw(ProjectorKind::A, static_cast<int>(b), eps)));
  LinOp mid = psi(cap_block(ji, ki, ii, eps));
  if (c > 0) mid = psi(jw(ProjectorKind::A, static_cast<int>(c), eps)) * mid;
  LinOp cup = psi(cup_block(ji, ki, ii, eps));
  return markov_closure_op(cup * (mid * bottom), static_cast<int>(a + b), eps);
}

namespace {

RatFunc theta_rec_impl(long a, long b, long c, int eps);

RatFunc theta_rec_memo(long a, long b, long c, int eps) {
  using Key = std::tuple<long, long, long, int>;
  static std::map<Key, RatFunc> cache;
  static std::mutex lock;
  const Key key{a, b, c, eps};
  {
    std::scoped_lock g(lock);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RatFunc v = theta_rec_impl(a, b, c, eps);
  std::scoped_lock g(lock);
  return cache.emplace(key, std::move(v)).first->second;
}

RatFunc theta_rec_impl(long a, long b, long c, int eps) {
  if (!is_admissible(a, b, c)) return RatFunc();  // no wiring exists
  auto meps_pow = [&](long n) { return RatFunc(n % 2 == 0 ? 1 : -eps); };
  if (a == 0) return meps_pow(b) * qint(b + 1);  // closure of A_b; b = c here
  if (b == 0) return meps_pow(a) * q_pow_sum(a);
  const long i = (b + c - a) / 2;
  // i = 0: both type A boxes absorb into d_a, leaving its closure
  if (i == 0) return meps_pow(a) * q_pow_sum(a);
  if (b == 1) {
    // i >= 1 plus admissibility force c = a + 1
    return meps_pow(a + 1) * (qint(a + 2) / qint(a + 1)) * q_pow_sum(a);
  }
  if (c <= 1) return theta_rec_memo(a, c, b, eps);  // exchange symmetry
  const long k = (a + b - c) / 2;
  RatFunc first = RatFunc(-eps) * (qint(c + 1) / qint(c)) * theta_rec_memo(a, b - 1, c - 1, eps);
  RatFunc second = RatFunc(eps) * (qint(k) * qint(k) / (qint(b) * qint(b - 1))) *
                   theta_rec_memo(a, b - 2, c, eps);
  return first + second;
}

}  // namespace

RatFunc theta_recursive(long a, long b, long c, int eps) {
  if (eps != 1 && eps != -1) throw contract_violation("theta_recursive: eps must be +-1");
  return theta_rec_memo(a, b, c, eps);
}

TLMorphism strand_relocation_lhs(int i, int j, int k, int eps) {
  if (i < 1 || j < 1 || k < 0) throw contract_violation("strand_relocation: need i,j >= 1, k >= 0");
  const int left = i + j - 2;  // open legs under the (i+j-1)-box
  const int right = j + k;     // open legs under the (j+k)-box
  // wrap cup: the (i+j-1)-box's last bottom leg plus a runner in the gap
  TLMorphism m = cup_block(left, 1, right, eps);
  // the two bottom boxes; the runner at position i+j passes between them
  m = compose(m, tensor_right_identity(jw(ProjectorKind::A, i + j - 1, eps), 1 + right));
  m = compose(m, tensor_left_identity(i + j, jw(ProjectorKind::A, right, eps)));
  // wrap cap: runner meets the right box's first top leg
  m = compose(m, cap_block(i + j - 1, 1, right - 1, eps));
  // j-1 nested arcs joining the boxes
  m = compose(m, cap_block(i, j - 1, k, eps));
  return compose(m, jw(ProjectorKind::A, i + k, eps));
}

TLMorphism strand_relocation_rhs(int i, int j, int k, int eps) {
  if (i < 1 || j < 1 || k < 0) throw contract_violation("strand_relocation: need i,j >= 1, k >= 0");
  const int left = i + j - 2;
  const int right = j + k;
  TLMorphism m = left > 0
                     ? mul(tensor_left_identity(left, jw(ProjectorKind::A, right, eps)),
                           tensor_right_identity(jw(ProjectorKind::A, left, eps), right))
                     : tensor_left_identity(left, jw(ProjectorKind::A, right, eps));
  m = compose(m, cap_block(i - 1, j - 1, k + 1, eps));
  return compose(m, jw(ProjectorKind::A, i + k, eps));
}

Report strand_removal_identities(int max_a, int max_d, int max_box) {
  Report rep;
  for (int eps : {1, -1}) {
    const std::string e = eps == 1 ? "+1" : "-1";
    // closing the last strand of the type A projector
    for (int s = 2; s <= max_a; ++s) {
      LinOp closed = partial_markov_closure(psi(jw(ProjectorKind::A, s, eps)), s, eps);
      LinOp want =
          psi(jw(ProjectorKind::A, s - 1, eps)) * (RatFunc(-eps) * qint(s + 1) / qint(s));
      rep.add("close A_" + std::to_string(s) + " last strand, eps=" + e, closed == want);
    }
    // closing a type D strand through U_n
    for (int n = 2; n <= max_d; ++n) {
      const RatFunc c = RatFunc(-eps) * q_pow_sum(n) / q_pow_sum(n - 1);
      TLMorphism un = gen_u(n, n + 1, eps);
      TLMorphism dn = tensor_right_identity(jw(ProjectorKind::D, n, eps), 1);
      TLMorphism dn1 = tensor_right_identity(jw(ProjectorKind::D, n - 1, eps), 2);
      rep.add("U_n d_" + std::to_string(n) + " U_n, eps=" + e,
              mul(mul(un, dn), un) == mul(un, dn1) * c);
    }
    // wrap-around strand relocation
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
          const int boxes = std::max({i + j - 1, j + k, i + k});
          if (boxes > max_box) continue;
          TLMorphism lhs = strand_relocation_lhs(i, j, k, eps);
          RatFunc coeff = qint(i) / qint(i + j - 1);
          if (eps == -1 && (j - 1) % 2 != 0) coeff = -coeff;  // eps^{j-1}
          TLMorphism rhs = strand_relocation_rhs(i, j, k, eps) * coeff;
          bool ok = lhs == rhs;
          if (ok && i + j + k <= 4) ok = psi(lhs) == psi(rhs);  // matrix spot-check
          rep.add("strand relocation (i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) +
                      "," + std::to_string(k) + "), eps=" + e,
                  ok);
        }
  }
  return rep;
}

}  // namespace tlbd
