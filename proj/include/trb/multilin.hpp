#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trb/matrix.hpp"

namespace trb {

using IndexTuple = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// Basis of the p-th exterior power of a dim-dimensional space: strictly
/// increasing index tuples in lexicographic order.
class ExtBasis {
 public:
  ExtBasis(std::size_t dim, std::size_t degree);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<IndexTuple>& tuples() const& { return tuples_; }
  // Safe to iterate on a temporary basis.
  std::vector<IndexTuple> tuples() && { return std::move(tuples_); }
  const IndexTuple& operator[](std::size_t i) const { return tuples_[i]; }

  /// Lexicographic position of a strictly increasing tuple. Throws
  /// IndexOutOfRange for out-of-range or non-increasing tuples.
  static std::size_t index_of(std::size_t dim, std::span<const std::size_t> tuple);

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::vector<IndexTuple> tuples_;
};

/// A permutation of {0..N-1} increasing on each consecutive block, where
/// permutation[k] is the argument index placed in slot k.
struct Unshuffle {
  std::vector<std::size_t> blocks;
  std::vector<std::size_t> permutation;
  int sign = 1;
};

/// All unshuffles for the given block sizes, permutations in lexicographic
/// order. Count is the multinomial coefficient.
std::vector<Unshuffle> enumerate_unshuffles(std::span<const std::size_t> blocks);

int permutation_sign(std::span<const std::size_t> perm);

/// Skew p-linear map from a source_dim space to a target_dim space, stored as
/// the target_dim x binomial(source_dim, p) matrix of values on ExtBasis.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim);
  Cochain(std::size_t degree, std::size_t source_dim, std::size_t target_dim, Matrix values);

  /// Degree-0 cochain holding a single target vector.
  static Cochain constant(std::size_t source_dim, const Vec& value);
  /// Degree-1 cochain from a linear map given as a target_dim x source_dim matrix.
  static Cochain linear(const Matrix& map);
  /// Inverse of flatten().
  static Cochain from_flat(std::size_t degree, std::size_t source_dim, std::size_t target_dim, const Vec& flat);

  std::size_t degree() const { return degree_; }
  std::size_t source_dim() const { return source_dim_; }
  std::size_t target_dim() const { return target_dim_; }
  const Matrix& matrix() const { return values_; }
  std::size_t column_count() const { return values_.cols(); }

  /// Value on a strictly increasing basis tuple.
  Vec at(std::span<const std::size_t> increasing) const;
  Vec column(std::size_t index) const { return values_.column(index); }
  /// Value on arbitrary basis indices: sorted with the permutation sign,
  /// zero when an index repeats.
  Vec on_basis(std::span<const std::size_t> indices) const;
  void set(std::span<const std::size_t> increasing, const Vec& value);

  /// Coordinates stacked column after column: entry (row, col) at col * target_dim + row.
  Vec flatten() const;
  bool is_zero() const { return values_.is_zero(); }

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, const Cochain& c);
  friend bool operator==(const Cochain& a, const Cochain& b) = default;

 private:
  std::size_t degree_ = 0;
  std::size_t source_dim_ = 0;
  std::size_t target_dim_ = 0;
  Matrix values_;
};

/// Multilinear skew-symmetric extension of f to arbitrary argument vectors.
/// Throws DimensionMismatch on argument count or length mismatch.
Vec skew_eval(const Cochain& f, std::span<const Vec> args);

/// f(lead, e_{rest[0]}, ..., e_{rest[p-2]}) for a general leading vector and
/// strictly increasing basis indices `rest`.
Vec eval_lead(const Cochain& f, const Vec& lead, std::span<const std::size_t> rest);

/// f(a, b, e_{rest...}) for general a, b and increasing basis indices `rest`.
Vec eval_lead2(const Cochain& f, const Vec& a, const Vec& b, std::span<const std::size_t> rest);

using Assignment = std::pair<IndexTuple, Vec>;

/// Builds a cochain from values on increasing tuples; unassigned tuples are
/// zero. Throws DuplicateAssignment, IndexOutOfRange, DimensionMismatch.
Cochain cochain_from_values(std::size_t degree, std::size_t source_dim, std::size_t target_dim,
                            const std::vector<Assignment>& assignments);

/// Full (not necessarily skew) bilinear map L x R -> O, column i * right_dim + j
/// holding the value on (e_i, e_j).
class BilinearMap {
 public:
  BilinearMap() = default;
  BilinearMap(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);
  BilinearMap(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim, Matrix table);
  static BilinearMap from_cochain(const Cochain& skew2);

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }
  const Matrix& table() const { return table_; }

  Vec at(std::size_t i, std::size_t j) const { return table_.column(i * right_ + j); }
  void set(std::size_t i, std::size_t j, const Vec& value) { table_.set_column(i * right_ + j, value); }
  Vec operator()(const Vec& x, const Vec& y) const;

  bool is_skew() const;
  /// Requires is_skew(); throws NotSkew otherwise.
  Cochain to_cochain() const;

  friend bool operator==(const BilinearMap& a, const BilinearMap& b) = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  Matrix table_;
};

}  // namespace trb
