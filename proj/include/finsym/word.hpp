#ifndef FINSYM_WORD_HPP
#define FINSYM_WORD_HPP

#include <string>
#include <string_view>
#include <vector>

#include "finsym/fin_map.hpp"

namespace finsym {

/// One generator symbol with its index.
struct Gen {
  Gen(GenKind kind, int index);

  GenKind kind;
  int index;

  friend bool operator==(const Gen&, const Gen&) = default;
};

/// A word of generator symbols read as a pipeline: the leftmost symbol acts
/// first on the input, so the concrete function of g1 g2 ... gk is
/// conc(gk) o ... o conc(g1).
using Word = std::vector<Gen>;

/// Token grammar: kind letter, decimal index, optional trailing apostrophe
/// (inverse marker, allowed only on z). Tokens are whitespace separated;
/// empty input is the empty word.
Word parse(std::string_view text);

std::string render(const Word& word);

/// Object dimensions along the pipeline; dims.front() is the anchor,
/// dims.size() == word length + 1.
using DimChain = std::vector<int>;

/// Dimension delta of one symbol kind (d: +1, s/u: -1, others: 0).
int dim_delta(GenKind kind);

/// Walks the pipeline computing the object dimension after each stage and
/// checking every index against its stage dimension.
DimChain typecheck(const Word& word, int at_dim);

/// The concrete function of the pipeline at the given anchor dimension.
/// The empty word evaluates to identity(at_dim).
FinMap eval(const Word& word, int at_dim);

/// The pipeline spelling of the arrow d_alpha o u_beta: u-symbols with the
/// indices of beta in decreasing order, then d-symbols with the indices of
/// alpha in increasing order.
Word canonical_spelling(const MultiIndex& alpha, const MultiIndex& beta);

/// Replaces z_i with t_{i-1} ... t_1 t_0 and zinv_i with t_0 t_1 ... t_{i-1};
/// z_0 and zinv_0 expand to nothing.
Word expand_z(const Word& word);

enum class Target { du, ds };

/// Rewrites between the s-generator and u-generator spellings, preserving
/// the evaluated function at every anchor where the input typechecks.
///   du: s_i -> z_i u_{i+1} zinv_i, r_i -> u_i d_i, then z's expand to t's
///   ds: u_i -> zinv_{i-1} s_{i-1} z_{i-1}, r_i -> u_i d_i first, then expand
Word translate(const Word& word, Target target);

}  // namespace finsym

#endif  // FINSYM_WORD_HPP
