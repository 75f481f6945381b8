#pragma once

// Exact arithmetic and linear algebra over Z/p^N.
//
// Z/p^N is a chain ring: every element is p^v * unit, so matrices admit a
// Smith form with p-power divisors and every linear question (solving,
// kernels, images, subgroup orders) reduces to reading off that form.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qcat/errors.hpp"

namespace qcat {

using Residue = std::uint64_t;

class Ring {
 public:
  Ring() = default;
  Ring(std::uint64_t p, int precision) : p_(p), precision_(precision) {
    if (p < 2) throw InvalidData("prime must be at least 2");
    if (precision < 0) throw InvalidData("negative precision");
    modulus_ = 1;
    for (int i = 0; i < precision; ++i) {
      if (modulus_ > std::numeric_limits<std::uint64_t>::max() / 4 / p)
        throw PrecisionTooLow("p^" + std::to_string(precision) +
                              " does not fit a machine word");
      modulus_ *= p;
    }
  }

  std::uint64_t p() const { return p_; }
  int precision() const { return precision_; }
  std::uint64_t modulus() const { return modulus_; }
  Ring with_precision(int n) const { return Ring(p_, n); }

  Residue reduce(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<Residue>(r);
  }
  Residue reduce_unsigned(std::uint64_t v) const { return v % modulus_; }

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  Residue sub(Residue a, Residue b) const {
    return a >= b ? a - b : a + (modulus_ - b);
  }
  Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % modulus_);
  }

  // p-adic valuation; zero has valuation equal to the precision.
  int valuation(Residue a) const {
    if (a == 0) return precision_;
    int v = 0;
    while (a % p_ == 0) {
      a /= p_;
      ++v;
    }
    return v;
  }
  bool is_unit(Residue a) const { return a % p_ != 0; }

  Residue unit_inverse(Residue a) const {
    if (!is_unit(a)) throw InvalidData("inverse of a non-unit");
    __int128 r0 = static_cast<__int128>(modulus_), r1 = a;
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      __int128 t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    __int128 m = static_cast<__int128>(modulus_);
    s0 %= m;
    if (s0 < 0) s0 += m;
    return static_cast<Residue>(s0);
  }

  // p^k reduced; zero once k reaches the precision.
  Residue power_of_p(int k) const {
    if (k >= precision_) return 0;
    Residue r = 1;
    for (int i = 0; i < k; ++i) r *= p_;
    return r % modulus_;
  }

  // Exact division of a by p^k as an integer representative; requires p^k | a.
  Residue divide_by_p_power(Residue a, int k) const {
    Residue q = a;
    for (int i = 0; i < k; ++i) {
      if (q % p_ != 0) throw DivNotDivisible("value not divisible by p^" + std::to_string(k));
      q /= p_;
    }
    return q;
  }

  // Representative in (-p^N/2, p^N/2].
  std::int64_t signed_value(Residue a) const {
    if (a > modulus_ / 2) return -static_cast<std::int64_t>(modulus_ - a);
    return static_cast<std::int64_t>(a);
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_;
  }

 private:
  std::uint64_t p_ = 2;
  int precision_ = 0;
  std::uint64_t modulus_ = 1;
};

// An element of Z_p known modulo p^N.
struct PAdicScalar {
  Ring ring;
  Residue value = 0;

  PAdicScalar() = default;
  PAdicScalar(Ring r, std::int64_t v) : ring(r), value(r.reduce(v)) {}

  int valuation() const { return ring.valuation(value); }

  PAdicScalar operator+(const PAdicScalar& o) const { return combine(o, 0); }
  PAdicScalar operator-(const PAdicScalar& o) const { return combine(o, 1); }
  PAdicScalar operator*(const PAdicScalar& o) const { return combine(o, 2); }

  // Equality is equality of residues at the smaller of the two precisions.
  friend bool operator==(const PAdicScalar& a, const PAdicScalar& b) {
    if (a.ring.p() != b.ring.p()) return false;
    int n = std::min(a.ring.precision(), b.ring.precision());
    Ring r = a.ring.with_precision(n);
    return r.reduce_unsigned(a.value) == r.reduce_unsigned(b.value);
  }

 private:
  PAdicScalar combine(const PAdicScalar& o, int op) const {
    if (ring.p() != o.ring.p()) throw InvalidData("mixed primes");
    Ring r = ring.with_precision(std::min(ring.precision(), o.ring.precision()));
    Residue a = r.reduce_unsigned(value), b = r.reduce_unsigned(o.value);
    PAdicScalar out;
    out.ring = r;
    out.value = op == 0 ? r.add(a, b) : op == 1 ? r.sub(a, b) : r.mul(a, b);
    return out;
  }
};

class PModVector {
 public:
  PModVector() = default;
  PModVector(Ring ring, std::size_t dim) : ring_(ring), v_(dim, 0) {}
  PModVector(Ring ring, std::vector<Residue> entries) : ring_(ring), v_(std::move(entries)) {
    for (auto& x : v_) x = ring_.reduce_unsigned(x);
  }
  static PModVector from_integers(Ring ring, std::span<const std::int64_t> xs) {
    PModVector out(ring, xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out.v_[i] = ring.reduce(xs[i]);
    return out;
  }

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return v_.size(); }
  Residue operator[](std::size_t i) const { return v_[i]; }
  Residue& operator[](std::size_t i) { return v_[i]; }
  const std::vector<Residue>& entries() const { return v_; }
  std::vector<Residue>& entries() { return v_; }

  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](Residue x) { return x == 0; });
  }
  int valuation() const {
    int v = ring_.precision();
    for (Residue x : v_) v = std::min(v, ring_.valuation(x));
    return v;
  }

  PModVector operator+(const PModVector& o) const {
    PModVector out(ring_, dim());
    for (std::size_t i = 0; i < dim(); ++i) out.v_[i] = ring_.add(v_[i], o.v_[i]);
    return out;
  }
  PModVector operator-(const PModVector& o) const {
    PModVector out(ring_, dim());
    for (std::size_t i = 0; i < dim(); ++i) out.v_[i] = ring_.sub(v_[i], o.v_[i]);
    return out;
  }
  PModVector operator-() const {
    PModVector out(ring_, dim());
    for (std::size_t i = 0; i < dim(); ++i) out.v_[i] = ring_.neg(v_[i]);
    return out;
  }
  PModVector scaled(Residue c) const {
    PModVector out(ring_, dim());
    for (std::size_t i = 0; i < dim(); ++i) out.v_[i] = ring_.mul(v_[i], c);
    return out;
  }
  // Reduction to a lower precision.
  PModVector reduced(int precision) const {
    Ring r = ring_.with_precision(precision);
    PModVector out(r, dim());
    for (std::size_t i = 0; i < dim(); ++i) out.v_[i] = r.reduce_unsigned(v_[i]);
    return out;
  }
  // Same representatives viewed at a (usually higher) precision.
  PModVector lifted(int precision) const {
    Ring r = ring_.with_precision(precision);
    PModVector out(r, dim());
    for (std::size_t i = 0; i < dim(); ++i) out.v_[i] = r.reduce_unsigned(v_[i]);
    return out;
  }

  friend bool operator==(const PModVector& a, const PModVector& b) {
    return a.ring_ == b.ring_ && a.v_ == b.v_;
  }
  friend bool operator<(const PModVector& a, const PModVector& b) { return a.v_ < b.v_; }

 private:
  Ring ring_;
  std::vector<Residue> v_;
};

class PModMatrix {
 public:
  PModMatrix() = default;
  PModMatrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static PModMatrix identity(Ring ring, std::size_t n) {
    PModMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.reduce(1);
    return m;
  }
  static PModMatrix from_integers(Ring ring, std::size_t rows, std::size_t cols,
                                  std::span<const std::int64_t> row_major) {
    PModMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.a_[i] = ring.reduce(row_major[i]);
    return m;
  }
  static PModMatrix from_columns(Ring ring, std::size_t rows, const std::vector<PModVector>& cols) {
    PModMatrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = ring.reduce_unsigned(cols[j][i]);
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Residue& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  PModVector column(std::size_t j) const {
    PModVector v(ring_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  PModVector row(std::size_t i) const {
    PModVector v(ring_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  PModMatrix operator*(const PModMatrix& o) const {
    PModMatrix out(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        Residue a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out(i, j) = ring_.add(out(i, j), ring_.mul(a, o(k, j)));
      }
    return out;
  }
  PModVector operator*(const PModVector& v) const {
    PModVector out(ring_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Residue s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s = ring_.add(s, ring_.mul((*this)(i, j), v[j]));
      out[i] = s;
    }
    return out;
  }
  // Row vector times matrix.
  PModVector left_multiply(const PModVector& v) const {
    PModVector out(ring_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Residue a = v[i];
      if (a == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) out[j] = ring_.add(out[j], ring_.mul(a, (*this)(i, j)));
    }
    return out;
  }
  PModMatrix transposed() const {
    PModMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  PModMatrix reduced(int precision) const {
    Ring r = ring_.with_precision(precision);
    PModMatrix out(r, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = r.reduce_unsigned(a_[i]);
    return out;
  }
  PModMatrix lifted(int precision) const { return reduced(precision); }
  PModMatrix scaled(Residue c) const {
    PModMatrix out = *this;
    for (auto& x : out.a_) x = ring_.mul(x, c);
    return out;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Residue x) { return x == 0; });
  }

  // Elementary operations, used by the Smith form.
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, k));
  }
  // row_i += c * row_k
  void add_row_multiple(std::size_t i, std::size_t k, Residue c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = ring_.add((*this)(i, j), ring_.mul(c, (*this)(k, j)));
  }
  // col_j += c * col_k
  void add_col_multiple(std::size_t j, std::size_t k, Residue c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
      (*this)(r, j) = ring_.add((*this)(r, j), ring_.mul(c, (*this)(r, k)));
  }
  void scale_row(std::size_t i, Residue u) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = ring_.mul((*this)(i, j), u);
  }
  void scale_col(std::size_t j, Residue u) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = ring_.mul((*this)(r, j), u);
  }

  friend bool operator==(const PModMatrix& a, const PModMatrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Residue> a_;
};

// left * M * right == diag(p^e_0, ..., p^e_{rank-1}, 0, ...), with both
// transforms invertible and their inverses kept alongside.
struct DiagonalForm {
  PModMatrix left, left_inv, right, right_inv;
  std::vector<int> exponents;  // length min(rows, cols); precision marks a zero divisor
  std::size_t rank = 0;

  int precision() const { return left.ring().precision(); }
  PModMatrix diagonal(std::size_t rows, std::size_t cols) const {
    PModMatrix d(left.ring(), rows, cols);
    for (std::size_t i = 0; i < rank; ++i) d(i, i) = left.ring().power_of_p(exponents[i]);
    return d;
  }
  int max_exponent() const {
    int e = 0;
    for (std::size_t i = 0; i < rank; ++i) e = std::max(e, exponents[i]);
    return e;
  }
};

inline DiagonalForm smith_normal_form(const PModMatrix& m) {
  const Ring& ring = m.ring();
  const std::size_t rows = m.rows(), cols = m.cols();
  PModMatrix a = m;
  DiagonalForm f{PModMatrix::identity(ring, rows), PModMatrix::identity(ring, rows),
                 PModMatrix::identity(ring, cols), PModMatrix::identity(ring, cols),
                 std::vector<int>(std::min(rows, cols), ring.precision()), 0};

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // Pivot of least valuation; ties go to the smaller column, then row.
    int best = ring.precision();
    std::size_t pi = k, pj = k;
    for (std::size_t j = k; j < cols && best > 0; ++j)
      for (std::size_t i = k; i < rows; ++i) {
        int v = ring.valuation(a(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (best >= ring.precision()) break;

    a.swap_rows(k, pi);
    f.left.swap_rows(k, pi);
    f.left_inv.swap_cols(k, pi);
    a.swap_cols(k, pj);
    f.right.swap_cols(k, pj);
    f.right_inv.swap_rows(k, pj);

    // Normalize the pivot to exactly p^best with a column scaling.
    Residue unit = ring.divide_by_p_power(a(k, k), best);
    Residue uinv = ring.unit_inverse(unit % ring.modulus());
    a.scale_col(k, uinv);
    f.right.scale_col(k, uinv);
    f.right_inv.scale_row(k, unit);

    for (std::size_t i = k + 1; i < rows; ++i) {
      if (a(i, k) == 0) continue;
      Residue c = ring.divide_by_p_power(a(i, k), best);
      Residue nc = ring.neg(ring.reduce_unsigned(c));
      a.add_row_multiple(i, k, nc);
      f.left.add_row_multiple(i, k, nc);
      f.left_inv.add_col_multiple(k, i, ring.reduce_unsigned(c));
    }
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (a(k, j) == 0) continue;
      Residue c = ring.divide_by_p_power(a(k, j), best);
      Residue nc = ring.neg(ring.reduce_unsigned(c));
      a.add_col_multiple(j, k, nc);
      f.right.add_col_multiple(j, k, nc);
      f.right_inv.add_row_multiple(k, j, ring.reduce_unsigned(c));
    }
    f.exponents[k] = best;
    f.rank = k + 1;
  }
  return f;
}

// One solution of M x = b, or nothing. Free coordinates of the diagonalized
// system are set to zero so the answer is reproducible.
inline std::optional<PModVector> solve_mod(const DiagonalForm& f, const PModVector& b) {
  const Ring& ring = f.left.ring();
  PModVector lb = f.left * b;
  PModVector y(ring, f.right.rows());
  for (std::size_t i = 0; i < lb.dim(); ++i) {
    if (i < f.rank) {
      if (ring.valuation(lb[i]) < f.exponents[i]) return std::nullopt;
      y[i] = ring.divide_by_p_power(lb[i], f.exponents[i]);
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  return f.right * y;
}

inline std::optional<PModVector> solve_mod(const PModMatrix& m, const PModVector& b) {
  return solve_mod(smith_normal_form(m), b);
}

// Generators of {x : M x = 0} with their orders (as exponents of p).
// Generators of order p^N are the free part; the others are torsion that
// only exists because of the truncation.
struct KernelBasis {
  std::vector<PModVector> generators;
  std::vector<int> order_exponents;

  std::size_t free_rank(int precision) const {
    return static_cast<std::size_t>(
        std::count(order_exponents.begin(), order_exponents.end(), precision));
  }
  int log_order() const {
    int s = 0;
    for (int e : order_exponents) s += e;
    return s;
  }
};

inline KernelBasis kernel_basis(const DiagonalForm& f, std::size_t cols) {
  const Ring& ring = f.left.ring();
  KernelBasis k;
  for (std::size_t j = 0; j < cols; ++j) {
    if (j < f.rank) {
      int e = f.exponents[j];
      if (e == 0) continue;
      k.generators.push_back(f.right.column(j).scaled(ring.power_of_p(ring.precision() - e)));
      k.order_exponents.push_back(e);
    } else {
      k.generators.push_back(f.right.column(j));
      k.order_exponents.push_back(ring.precision());
    }
  }
  return k;
}

inline KernelBasis kernel_basis(const PModMatrix& m) {
  return kernel_basis(smith_normal_form(m), m.cols());
}

// Z_p-kernel: only the columns with zero divisor. Valid as a lattice
// modulo p^(N - max exponent).
inline std::vector<PModVector> free_kernel(const DiagonalForm& f, std::size_t cols) {
  std::vector<PModVector> out;
  for (std::size_t j = f.rank; j < cols; ++j) out.push_back(f.right.column(j));
  return out;
}

// log_p |image of M| on (Z/p^N)^cols.
inline int image_log_order(const DiagonalForm& f) {
  int s = 0;
  for (std::size_t i = 0; i < f.rank; ++i) s += f.precision() - f.exponents[i];
  return s;
}

// A subgroup of (Z/p^N)^dim given by generators.
class SubModule {
 public:
  SubModule() = default;
  SubModule(Ring ring, std::size_t dim) : ring_(ring), dim_(dim) {}
  SubModule(Ring ring, std::size_t dim, std::vector<PModVector> gens)
      : ring_(ring), dim_(dim), gens_(std::move(gens)) {}

  static SubModule whole(Ring ring, std::size_t dim) {
    std::vector<PModVector> g;
    for (std::size_t i = 0; i < dim; ++i) {
      PModVector e(ring, dim);
      e[i] = ring.reduce(1);
      g.push_back(e);
    }
    return SubModule(ring, dim, std::move(g));
  }

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const std::vector<PModVector>& generators() const { return gens_; }

  PModMatrix matrix() const {
    if (gens_.empty()) return PModMatrix(ring_, dim_, 0);
    return PModMatrix::from_columns(ring_, dim_, gens_);
  }
  const DiagonalForm& form() const {
    if (!form_) form_ = smith_normal_form(matrix());
    return *form_;
  }

  int log_order() const { return gens_.empty() ? 0 : image_log_order(form()); }
  bool contains(const PModVector& v) const {
    if (gens_.empty()) return v.is_zero();
    return solve_mod(form(), v).has_value();
  }
  bool contains(const SubModule& o) const {
    return std::all_of(o.gens_.begin(), o.gens_.end(),
                       [&](const PModVector& g) { return contains(g); });
  }
  friend bool operator==(const SubModule& a, const SubModule& b) {
    return a.contains(b) && b.contains(a);
  }

  SubModule operator+(const SubModule& o) const {
    std::vector<PModVector> g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return SubModule(ring_, dim_, std::move(g));
  }
  SubModule scaled(Residue c) const {
    std::vector<PModVector> g;
    for (auto& v : gens_) g.push_back(v.scaled(c));
    return SubModule(ring_, dim_, std::move(g));
  }
  SubModule intersect(const SubModule& o) const {
    if (gens_.empty() || o.gens_.empty()) return SubModule(ring_, dim_);
    const std::size_t a = gens_.size(), b = o.gens_.size();
    PModMatrix m(ring_, dim_, a + b);
    for (std::size_t j = 0; j < a; ++j)
      for (std::size_t i = 0; i < dim_; ++i) m(i, j) = gens_[j][i];
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t i = 0; i < dim_; ++i) m(i, a + j) = ring_.neg(o.gens_[j][i]);
    KernelBasis k = kernel_basis(m);
    std::vector<PModVector> out;
    for (const auto& c : k.generators) {
      PModVector v(ring_, dim_);
      for (std::size_t j = 0; j < a; ++j)
        if (c[j] != 0) v = v + gens_[j].scaled(c[j]);
      if (!v.is_zero()) out.push_back(v);
    }
    return SubModule(ring_, dim_, std::move(out));
  }

  // Canonical basis: generators g_i with orders p^(N - e_i) such that the
  // subgroup is the internal direct sum of the cyclic groups <g_i>.
  std::vector<std::pair<PModVector, int>> cyclic_decomposition() const {
    std::vector<std::pair<PModVector, int>> out;
    if (gens_.empty()) return out;
    const DiagonalForm& f = form();
    PModMatrix linv = f.left_inv;
    for (std::size_t i = 0; i < f.rank; ++i) {
      PModVector g = linv.column(i).scaled(ring_.power_of_p(f.exponents[i]));
      out.emplace_back(g, ring_.precision() - f.exponents[i]);
    }
    return out;
  }

  // All elements, sorted; intended for small subgroups only.
  std::vector<PModVector> elements(std::size_t cap = 1u << 20) const {
    auto basis = cyclic_decomposition();
    std::size_t total = 1;
    for (auto& [g, e] : basis) {
      for (int k = 0; k < e; ++k) {
        total *= ring_.p();
        if (total > cap) throw CapExceeded("subgroup too large to enumerate");
      }
    }
    std::vector<PModVector> out{PModVector(ring_, dim_)};
    for (auto& [g, e] : basis) {
      std::vector<PModVector> next;
      std::uint64_t order = 1;
      for (int k = 0; k < e; ++k) order *= ring_.p();
      for (const auto& v : out) {
        PModVector cur = v;
        for (std::uint64_t c = 0; c < order; ++c) {
          next.push_back(cur);
          cur = cur + g;
        }
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  Ring ring_;
  std::size_t dim_ = 0;
  std::vector<PModVector> gens_;
  mutable std::optional<DiagonalForm> form_;
};

inline std::ostream& operator<<(std::ostream& os, const PModVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v.ring().signed_value(v[i]);
  return os << ')';
}

}  // namespace qcat
