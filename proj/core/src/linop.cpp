#include "tlbd/linop.hpp"

#include <algorithm>

#include "tlbd/errors.hpp"

namespace tlbd {

void Vec::add(long i, const RatFunc& v) {
  if (v.is_zero()) return;
  auto it = e.find(i);
  if (it == e.end()) {
    e.emplace(i, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) e.erase(it);
}

Vec Vec::operator+(const Vec& o) const {
  if (dim != o.dim) throw contract_violation("Vec +: dimension mismatch");
  Vec r = *this;
  for (const auto& [i, v] : o.e) r.add(i, v);
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  if (dim != o.dim) throw contract_violation("Vec -: dimension mismatch");
  Vec r = *this;
  for (const auto& [i, v] : o.e) r.add(i, -v);
  return r;
}

Vec Vec::operator*(const RatFunc& c) const {
  Vec r;
  r.dim = dim;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : e) r.e.emplace(i, v * c);
  return r;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec r;
  r.dim = a.dim * b.dim;
  for (const auto& [i, v] : a.e)
    for (const auto& [j, w] : b.e) r.e.emplace(i * b.dim + j, v * w);
  return r;
}

LinOp LinOp::identity(long n) {
  LinOp m(n, n);
  for (long i = 0; i < n; ++i) m.row[static_cast<size_t>(i)].emplace(i, RatFunc(1));
  return m;
}

void LinOp::add(long r, long c, const RatFunc& v) {
  if (v.is_zero()) return;
  auto& rw = row[static_cast<size_t>(r)];
  auto it = rw.find(c);
  if (it == rw.end()) {
    rw.emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) rw.erase(it);
}

RatFunc LinOp::at(long r, long c) const {
  const auto& rw = row[static_cast<size_t>(r)];
  auto it = rw.find(c);
  return it == rw.end() ? RatFunc() : it->second;
}

long LinOp::nnz() const {
  long n = 0;
  for (const auto& rw : row) n += static_cast<long>(rw.size());
  return n;
}

LinOp LinOp::operator+(const LinOp& o) const {
  if (rows != o.rows || cols != o.cols) throw contract_violation("LinOp +: shape mismatch");
  LinOp r = *this;
  for (long i = 0; i < rows; ++i)
    for (const auto& [c, v] : o.row[static_cast<size_t>(i)]) r.add(i, c, v);
  return r;
}

LinOp LinOp::operator-(const LinOp& o) const {
  if (rows != o.rows || cols != o.cols) throw contract_violation("LinOp -: shape mismatch");
  LinOp r = *this;
  for (long i = 0; i < rows; ++i)
    for (const auto& [c, v] : o.row[static_cast<size_t>(i)]) r.add(i, c, -v);
  return r;
}

LinOp LinOp::operator*(const LinOp& o) const {
  if (cols != o.rows) throw contract_violation("LinOp *: dimension mismatch");
  LinOp r(rows, o.cols);
  for (long i = 0; i < rows; ++i)
    for (const auto& [k, v] : row[static_cast<size_t>(i)])
      for (const auto& [j, w] : o.row[static_cast<size_t>(k)]) r.add(i, j, v * w);
  return r;
}

LinOp LinOp::operator*(const RatFunc& c) const {
  LinOp r(rows, cols);
  if (c.is_zero()) return r;
  for (long i = 0; i < rows; ++i)
    for (const auto& [j, v] : row[static_cast<size_t>(i)])
      r.row[static_cast<size_t>(i)].emplace(j, v * c);
  return r;
}

Vec LinOp::apply(const Vec& v) const {
  if (v.dim != cols) throw contract_violation("LinOp apply: dimension mismatch");
  Vec r;
  r.dim = rows;
  for (long i = 0; i < rows; ++i) {
    RatFunc acc;
    for (const auto& [c, w] : row[static_cast<size_t>(i)]) {
      auto it = v.e.find(c);
      if (it != v.e.end()) acc += w * it->second;
    }
    if (!acc.is_zero()) r.e.emplace(i, acc);
  }
  return r;
}

bool LinOp::is_zero() const {
  for (const auto& rw : row)
    if (!rw.empty()) return false;
  return true;
}

RatFunc LinOp::trace() const {
  if (rows != cols) throw contract_violation("trace: non-square");
  RatFunc t;
  for (long i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

LinOp kron(const LinOp& a, const LinOp& b) {
  LinOp r(a.rows * b.rows, a.cols * b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (const auto& [j, v] : a.row[static_cast<size_t>(i)])
      for (long p = 0; p < b.rows; ++p)
        for (const auto& [q, w] : b.row[static_cast<size_t>(p)])
          r.row[static_cast<size_t>(i * b.rows + p)].emplace(j * b.cols + q, v * w);
  return r;
}

LinOp apply_slice_left(const LinOp& s, long left_bits, long right_bits, const LinOp& m) {
  const long lo = 1L << right_bits;
  const long hi = 1L << left_bits;
  if (hi * s.cols * lo != m.rows) throw contract_violation("apply_slice_left: shape mismatch");
  LinOp r(hi * s.rows * lo, m.cols);
  for (long mr = 0; mr < m.rows; ++mr) {
    const auto& rw = m.row[static_cast<size_t>(mr)];
    if (rw.empty()) continue;
    const long rlow = mr % lo;
    const long mid = (mr / lo) % s.cols;
    const long rhigh = mr / (lo * s.cols);
    for (long sr = 0; sr < s.rows; ++sr) {
      auto it = s.row[static_cast<size_t>(sr)].find(mid);
      if (it == s.row[static_cast<size_t>(sr)].end()) continue;
      const long out = (rhigh * s.rows + sr) * lo + rlow;
      for (const auto& [c, v] : rw) r.add(out, c, it->second * v);
    }
  }
  return r;
}

namespace {

// Fraction-free (Bareiss-style on sparse rows) rank of rows of exact
// rationals; entries are cleared to integers per row first.
long rank_of_rational_rows(std::vector<std::map<long, Rational>> rows) {
  long rank = 0;
  std::vector<std::pair<long, std::map<long, Rational>>> pivots;  // (col, normalized row)
  for (auto& r : rows) {
    for (const auto& [col, prow] : pivots) {
      auto it = r.find(col);
      if (it == r.end()) continue;
      Rational f = it->second;
      for (const auto& [c, v] : prow) {
        auto jt = r.find(c);
        if (jt == r.end()) {
          Rational nv = -f * v;
          if (nv != 0) r.emplace(c, nv);
        } else {
          jt->second -= f * v;
          if (jt->second == 0) r.erase(jt);
        }
      }
    }
    if (r.empty()) continue;
    const long col = r.begin()->first;
    const Rational lead = r.begin()->second;
    std::map<long, Rational> prow;
    for (const auto& [c, v] : r) prow.emplace(c, v / lead);
    pivots.emplace_back(col, std::move(prow));
    ++rank;
  }
  return rank;
}

}  // namespace

long rank_rows_at_samples(const std::vector<std::map<long, RatFunc>>& rows,
                          const std::vector<Rational>& samples) {
  long best = 0;
  for (const auto& q0 : samples) {
    std::vector<std::map<long, Rational>> specialized;
    specialized.reserve(rows.size());
    bool pole = false;
    for (const auto& r : rows) {
      std::map<long, Rational> sr;
      for (const auto& [c, v] : r) {
        Rational x;
        try {
          x = v.eval_at(q0);
        } catch (const pole_error&) {
          pole = true;
          break;
        }
        if (x != 0) sr.emplace(c, x);
      }
      if (pole) break;
      specialized.push_back(std::move(sr));
    }
    if (pole) continue;
    best = std::max(best, rank_of_rational_rows(std::move(specialized)));
  }
  return best;
}

long rank_at_samples(const LinOp& m, const std::vector<Rational>& samples) {
  return rank_rows_at_samples(m.row, samples);
}

}  // namespace tlbd
