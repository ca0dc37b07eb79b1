#include "trb/multilin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "trb/errors.hpp"

namespace trb {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExtBasis::ExtBasis(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {
  tuples_.reserve(binomial(dim, degree));
  IndexTuple t(degree);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t slot, std::size_t from) {
    if (slot == degree) {
      tuples_.push_back(t);
      return;
    }
    for (std::size_t i = from; i + (degree - slot) <= dim; ++i) {
      t[slot] = i;
      rec(slot + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::size_t ExtBasis::index_of(std::size_t dim, std::span<const std::size_t> tuple) {
  const std::size_t p = tuple.size();
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t s = 0; s < p; ++s) {
    require(tuple[s] < dim, ErrorKind::IndexOutOfRange,
            "index " + std::to_string(tuple[s]) + " out of range for dimension " + std::to_string(dim));
    require(tuple[s] >= next, ErrorKind::IndexOutOfRange, "tuple is not strictly increasing");
    for (std::size_t j = next; j < tuple[s]; ++j) rank += binomial(dim - 1 - j, p - 1 - s);
    next = tuple[s] + 1;
  }
  return rank;
}

int permutation_sign(std::span<const std::size_t> perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

std::vector<Unshuffle> enumerate_unshuffles(std::span<const std::size_t> blocks) {
  const std::size_t total = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
  std::vector<Unshuffle> out;
  std::vector<std::size_t> perm;
  perm.reserve(total);
  std::vector<bool> used(total, false);

  std::function<void(std::size_t)> fill_block;
  std::function<void(std::size_t, std::size_t, std::size_t)> choose = [&](std::size_t b, std::size_t left,
                                                                           std::size_t from) {
    if (left == 0) {
      fill_block(b + 1);
      return;
    }
    for (std::size_t i = from; i < total; ++i) {
      if (used[i]) continue;
      used[i] = true;
      perm.push_back(i);
      choose(b, left - 1, i + 1);
      perm.pop_back();
      used[i] = false;
    }
  };
  fill_block = [&](std::size_t b) {
    if (b == blocks.size()) {
      out.push_back(Unshuffle{std::vector<std::size_t>(blocks.begin(), blocks.end()), perm, permutation_sign(perm)});
      return;
    }
    choose(b, blocks[b], 0);
  };
  fill_block(0);
  return out;
}

Cochain::Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim)
    : degree_(degree),
      source_dim_(source_dim),
      target_dim_(target_dim),
      values_(target_dim, binomial(source_dim, degree)) {}

Cochain::Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim, Matrix values)
    : degree_(degree), source_dim_(source_dim), target_dim_(target_dim), values_(std::move(values)) {
  require(values_.rows() == target_dim && values_.cols() == binomial(source_dim, degree),
          ErrorKind::DimensionMismatch,
          "cochain matrix must be " + std::to_string(target_dim) + "x" +
              std::to_string(binomial(source_dim, degree)));
}

Cochain Cochain::constant(std::size_t source_dim, const Vec& value) {
  Cochain c(0, source_dim, value.size());
  c.values_.set_column(0, value);
  return c;
}

Cochain Cochain::linear(const Matrix& map) { return Cochain(1, map.cols(), map.rows(), map); }

Cochain Cochain::from_flat(std::size_t degree, std::size_t source_dim, std::size_t target_dim, const Vec& flat) {
  Cochain c(degree, source_dim, target_dim);
  require(flat.size() == target_dim * c.column_count(), ErrorKind::DimensionMismatch, "flat cochain length");
  for (std::size_t col = 0; col < c.column_count(); ++col)
    for (std::size_t r = 0; r < target_dim; ++r) c.values_(r, col) = flat[col * target_dim + r];
  return c;
}

Vec Cochain::at(std::span<const std::size_t> increasing) const {
  require(increasing.size() == degree_, ErrorKind::DimensionMismatch, "cochain argument count");
  return values_.column(ExtBasis::index_of(source_dim_, increasing));
}

Vec Cochain::on_basis(std::span<const std::size_t> indices) const {
  require(indices.size() == degree_, ErrorKind::DimensionMismatch, "cochain argument count");
  IndexTuple sorted(indices.begin(), indices.end());
  int sign = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return zero_vec(target_dim_);
  Vec v = at(sorted);
  return sign > 0 ? v : -v;
}

void Cochain::set(std::span<const std::size_t> increasing, const Vec& value) {
  require(increasing.size() == degree_, ErrorKind::DimensionMismatch, "cochain argument count");
  require(value.size() == target_dim_, ErrorKind::DimensionMismatch, "cochain value length");
  values_.set_column(ExtBasis::index_of(source_dim_, increasing), value);
}

Vec Cochain::flatten() const {
  Vec flat;
  flat.reserve(target_dim_ * column_count());
  for (std::size_t col = 0; col < column_count(); ++col)
    for (std::size_t r = 0; r < target_dim_; ++r) flat.push_back(values_(r, col));
  return flat;
}

namespace {

void require_same_space(const Cochain& a, const Cochain& b) {
  require(a.degree() == b.degree() && a.source_dim() == b.source_dim() && a.target_dim() == b.target_dim(),
          ErrorKind::DimensionMismatch, "cochains live in different spaces");
}

Scalar determinant(std::vector<Scalar> m, std::size_t n) {
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p * n + c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[c * n + j]);
      det = -det;
    }
    det *= m[c * n + c];
    const Scalar inv = Scalar(1) / m[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i * n + c].is_zero()) continue;
      const Scalar f = m[i * n + c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i * n + j] -= f * m[c * n + j];
    }
  }
  return det;
}

}  // namespace

Cochain& Cochain::operator+=(const Cochain& other) {
  require_same_space(*this, other);
  values_ += other.values_;
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  require_same_space(*this, other);
  values_ -= other.values_;
  return *this;
}

Cochain operator*(const Scalar& s, const Cochain& c) {
  Cochain r = c;
  r.values_ = s * c.values_;
  return r;
}

Vec skew_eval(const Cochain& f, std::span<const Vec> args) {
  const std::size_t p = f.degree();
  require(args.size() == p, ErrorKind::DimensionMismatch,
          "skew_eval: expected " + std::to_string(p) + " arguments, got " + std::to_string(args.size()));
  for (const auto& a : args)
    require(a.size() == f.source_dim(), ErrorKind::DimensionMismatch, "skew_eval: argument dimension");
  Vec out = zero_vec(f.target_dim());
  const ExtBasis basis(f.source_dim(), p);
  std::vector<Scalar> minor(p * p);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Vec value = f.column(col);
    if (is_zero(value)) continue;
    const IndexTuple& t = basis[col];
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t l = 0; l < p; ++l) minor[k * p + l] = args[k][t[l]];
    const Scalar d = determinant(minor, p);
    if (!d.is_zero()) axpy(out, d, value);
  }
  return out;
}

Vec eval_lead(const Cochain& f, const Vec& lead, std::span<const std::size_t> rest) {
  require(rest.size() + 1 == f.degree(), ErrorKind::DimensionMismatch, "eval_lead: argument count");
  require(lead.size() == f.source_dim(), ErrorKind::DimensionMismatch, "eval_lead: argument dimension");
  Vec out = zero_vec(f.target_dim());
  IndexTuple t(rest.size() + 1);
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (lead[i].is_zero()) continue;
    std::size_t pos = 0;
    bool repeated = false;
    for (auto r : rest) {
      if (r == i) repeated = true;
      if (r < i) ++pos;
    }
    if (repeated) continue;
    for (std::size_t k = 0, s = 0; k < t.size(); ++k) t[k] = (k == pos) ? i : rest[s++];
    const Vec v = f.at(t);
    axpy(out, pos % 2 == 0 ? lead[i] : -lead[i], v);
  }
  return out;
}

Vec eval_lead2(const Cochain& f, const Vec& a, const Vec& b, std::span<const std::size_t> rest) {
  require(rest.size() + 2 == f.degree(), ErrorKind::DimensionMismatch, "eval_lead2: argument count");
  require(a.size() == f.source_dim() && b.size() == f.source_dim(), ErrorKind::DimensionMismatch,
          "eval_lead2: argument dimension");
  Vec out = zero_vec(f.target_dim());
  IndexTuple idx(rest.size() + 2);
  std::copy(rest.begin(), rest.end(), idx.begin() + 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero() || i == j) continue;
      idx[0] = i;
      idx[1] = j;
      axpy(out, a[i] * b[j], f.on_basis(idx));
    }
  }
  return out;
}

Cochain cochain_from_values(std::size_t degree, std::size_t source_dim, std::size_t target_dim,
                            const std::vector<Assignment>& assignments) {
  Cochain c(degree, source_dim, target_dim);
  std::vector<bool> seen(c.column_count(), false);
  for (const auto& [tuple, value] : assignments) {
    require(tuple.size() == degree, ErrorKind::DimensionMismatch, "assignment tuple length");
    require(value.size() == target_dim, ErrorKind::DimensionMismatch, "assignment value length");
    const std::size_t col = ExtBasis::index_of(source_dim, tuple);
    require(!seen[col], ErrorKind::DuplicateAssignment, "tuple assigned twice");
    seen[col] = true;
    c.set(tuple, value);
  }
  return c;
}

BilinearMap::BilinearMap(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_(left_dim), right_(right_dim), out_(out_dim), table_(out_dim, left_dim * right_dim) {}

BilinearMap::BilinearMap(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim, Matrix table)
    : left_(left_dim), right_(right_dim), out_(out_dim), table_(std::move(table)) {
  require(table_.rows() == out_ && table_.cols() == left_ * right_, ErrorKind::DimensionMismatch,
          "bilinear table shape");
}

BilinearMap BilinearMap::from_cochain(const Cochain& skew2) {
  require(skew2.degree() == 2, ErrorKind::DimensionMismatch, "from_cochain needs a degree-2 cochain");
  const std::size_t n = skew2.source_dim();
  BilinearMap b(n, n, skew2.target_dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec v = skew2.at(IndexTuple{i, j});
      b.set(i, j, v);
      b.set(j, i, -v);
    }
  return b;
}

Vec BilinearMap::operator()(const Vec& x, const Vec& y) const {
  require(x.size() == left_ && y.size() == right_, ErrorKind::DimensionMismatch, "bilinear argument dimension");
  Vec out = zero_vec(out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t r = 0; r < out_; ++r) {
        const Scalar& t = table_(r, i * right_ + j);
        if (!t.is_zero()) out[r] += c * t;
      }
    }
  }
  return out;
}

bool BilinearMap::is_skew() const {
  if (left_ != right_) return false;
  for (std::size_t i = 0; i < left_; ++i)
    for (std::size_t j = i; j < left_; ++j)
      if (!is_zero(at(i, j) + at(j, i))) return false;
  return true;
}

Cochain BilinearMap::to_cochain() const {
  require(is_skew(), ErrorKind::NotSkew, "bilinear map is not skew-symmetric");
  Cochain c(2, left_, out_);
  for (std::size_t i = 0; i < left_; ++i)
    for (std::size_t j = i + 1; j < left_; ++j) c.set(IndexTuple{i, j}, at(i, j));
  return c;
}

}  // namespace trb
