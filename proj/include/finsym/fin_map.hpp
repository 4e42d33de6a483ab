#ifndef FINSYM_FIN_MAP_HPP
#define FINSYM_FIN_MAP_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "finsym/errors.hpp"

namespace finsym {

/// Generator symbols. `zinv` is the inverse of the cyclic permutation `z`;
/// it is kept first-class because the conjugation identities use it pervasively.
enum class GenKind { d, s, t, u, z, zinv, r };

const char* kind_letter(GenKind k);

/// A concrete function [n] -> [m] between the sets [n] = {0,...,n},
/// stored as its value table. Immutable after construction.
class FinMap {
 public:
  FinMap(int dom_dim, int cod_dim, std::vector<int> table);

  int dom_dim() const { return static_cast<int>(table_.size()) - 1; }
  int cod_dim() const { return cod_; }

  /// f(p) for 0 <= p <= dom_dim().
  int operator()(int p) const { return table_[static_cast<std::size_t>(p)]; }

  std::span<const int> table() const { return table_; }

  friend bool operator==(const FinMap&, const FinMap&) = default;
  friend std::strong_ordering operator<=>(const FinMap&, const FinMap&) = default;

 private:
  int cod_;
  std::vector<int> table_;
};

std::string to_string(const FinMap& f);
std::ostream& operator<<(std::ostream& os, const FinMap& f);

/// Strictly increasing sequence of indices >= 1 (0 is never a member).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> indices);

  /// Builds from an arbitrary collection: sorts and rejects duplicates / zeros.
  static MultiIndex sorted(std::vector<int> indices);

  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  bool contains(int i) const;
  /// #{ j in this | j < p }
  int count_below(int p) const;

  const std::vector<int>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> indices_;
};

std::string to_string(const MultiIndex& mi);

struct MapClass {
  bool monotonic = false;
  bool quasi_monotonic = false;
  bool injective = false;
  bool surjective = false;
  bool permutation = false;
  bool fixes_zero = false;
};

FinMap make_map(int dom_dim, int cod_dim, std::vector<int> table);

FinMap identity(int n);

/// result(p) = outer(inner(p)); requires inner.cod_dim == outer.dom_dim.
FinMap compose(const FinMap& outer, const FinMap& inner);

/// The generator with the given dimension superscript:
///   d_i^(n): [n-1] -> [n]   monotonic injection whose image omits i
///   s_i^(n): [n+1] -> [n]   monotonic surjection hitting i twice
///   t_i^(n): [n]   -> [n]   adjacent transposition (i i+1)
///   u_i^(n): [n+1] -> [n]   sends 0 and i to 0, shifts above i down (i >= 1)
///   z_i^(n): [n]   -> [n]   the (i+1)-cycle 0 -> 1 -> ... -> i -> 0
///   zinv: inverse permutation of z_i
///   r_i^(n): [n]   -> [n]   sends 0 and i to 0, fixes the rest (i >= 1)
FinMap generator(GenKind kind, int n, int i);

MapClass classify(const FinMap& f);

/// Inverse permutation; requires classify(f).permutation.
FinMap invert(const FinMap& f);

/// u_beta: [n] -> [n - |beta|]. result(p) = 0 iff p = 0 or p in beta,
/// otherwise p - #{ i in beta | i < p }.
FinMap multi_u(int n, const MultiIndex& beta);

/// d_alpha: [n - |alpha|] -> [n], the monotonic injection whose image is
/// [n] minus the indices of alpha.
FinMap multi_d(int n, const MultiIndex& alpha);

}  // namespace finsym

#endif  // FINSYM_FIN_MAP_HPP
