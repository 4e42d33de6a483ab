#ifndef FINSYM_RULES_HPP
#define FINSYM_RULES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finsym/word.hpp"

namespace finsym {

struct RuleFamily {
  std::string name;
  std::string description;
};

/// The eleven relation families, in presentation order.
const std::vector<RuleFamily>& families();

bool is_family(std::string_view name);

/// One fully indexed relation: both sides typecheck at anchor_dim with the
/// same endpoint dimension.
struct RuleInstance {
  Word lhs;
  Word rhs;
  int anchor_dim = 0;
  std::string family;
  std::string case_label;
};

/// Every instance of the family whose sides typecheck at some anchor
/// <= max_dim, enumerated over all index tuples satisfying the row's side
/// condition. Throws UnknownFamily for unrecognized names.
std::vector<RuleInstance> instantiate(std::string_view family, int max_dim);

/// One oriented rewrite of the leftmost reducible adjacent pair of a d/u
/// word (d_0 excluded):
///   d_i u_i -> (deleted)        d_i u_j -> u_{j-1} d_i   (0 != i < j)
///   d_i u_j -> u_j d_{i-1} (i > j)
///   u_i u_j -> u_{j+1} u_i (i <= j)      toward decreasing u-indices
///   d_i d_j -> d_j d_{i+1} (i >= j)      toward increasing d-indices
/// Returns nothing when the word is already in normal form.
std::optional<Word> rewrite_step(const Word& word);

/// Proven upper bound on the number of rewrite steps for this word.
///
/// With L the length and V = maxidx + 2L a bound on every index that can
/// appear during rewriting: each d-u swap or deletion lowers the count of
/// d-before-u pairs (at most L^2/4 of them), each u-u step raises the u-index
/// sum by one, and each d-d step raises the d-index sum by one, while those
/// sums stay within L*V and only drop at d-u steps. Summing gives a bound
/// under L^2 + 3L(V + 2) + 1.
std::uint64_t normalize_step_bound(const Word& word);

struct NormalizeStats {
  Word normal_form;
  std::uint64_t steps = 0;
  std::uint64_t bound = 0;
};

/// Rewrites to a fixed point: all u-symbols (strictly decreasing indices)
/// before all d-symbols (strictly increasing indices). The result equals the
/// canonical spelling of the unique factorization of the evaluated map.
NormalizeStats normalize_qord_traced(Word word);

Word normalize_qord(const Word& word);

}  // namespace finsym

#endif  // FINSYM_RULES_HPP
