#pragma once

#include <map>
#include <vector>

#include "tlbd/qfield.hpp"

namespace tlbd {

/// Sparse vector over Q(q).  Tensor-power spaces are indexed by bitstrings
/// (x = 0, y = 1), lexicographic, leftmost factor = most significant bit.
struct Vec {
  long dim = 0;
  std::map<long, RatFunc> e;  ///< index -> nonzero entry

  void add(long i, const RatFunc& v);
  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator*(const RatFunc& c) const;
  bool is_zero() const { return e.empty(); }
  bool operator==(const Vec& o) const { return dim == o.dim && e == o.e; }
};

/// Tensor product, left factor most significant.
Vec kron(const Vec& a, const Vec& b);

/// Sparse row-major matrix over Q(q).
struct LinOp {
  long rows = 0, cols = 0;
  std::vector<std::map<long, RatFunc>> row;  ///< row[r][c] -> nonzero entry

  LinOp() = default;
  LinOp(long r, long c) : rows(r), cols(c), row(static_cast<size_t>(r)) {}

  static LinOp identity(long n);

  void add(long r, long c, const RatFunc& v);
  RatFunc at(long r, long c) const;
  long nnz() const;

  LinOp operator+(const LinOp& o) const;
  LinOp operator-(const LinOp& o) const;
  LinOp operator*(const LinOp& o) const;  ///< matrix product, dimension checked
  LinOp operator*(const RatFunc& c) const;
  Vec apply(const Vec& v) const;
  bool operator==(const LinOp& o) const { return rows == o.rows && cols == o.cols && row == o.row; }
  bool is_zero() const;

  RatFunc trace() const;
};

LinOp kron(const LinOp& a, const LinOp& b);

/// Compose with id_{2^left} (x) s (x) id_{2^right} on the left, without
/// materializing the Kronecker product.  s acts on a middle bit-slice.
LinOp apply_slice_left(const LinOp& s, long left_bits, long right_bits, const LinOp& m);

/// Exact rank certificate at sample points: fraction-free elimination of the
/// matrix specialized at rational q0 values.  Returns the best rank found;
/// it lower-bounds the generic rank, so hitting min(rows, cols) (or any
/// claimed full target) certifies full rank over Q(q).
long rank_at_samples(const LinOp& m, const std::vector<Rational>& samples);

/// Same certificate for a dense row list (used for flattened Psi images).
long rank_rows_at_samples(const std::vector<std::map<long, RatFunc>>& rows,
                          const std::vector<Rational>& samples);

}  // namespace tlbd
