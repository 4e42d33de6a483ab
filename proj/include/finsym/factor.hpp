#ifndef FINSYM_FACTOR_HPP
#define FINSYM_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "finsym/fin_map.hpp"
#include "finsym/word.hpp"

namespace finsym {

/// Unique factorization of a monotonic map as injection-after-surjection:
/// alpha lists the codomain points outside the image (0 permitted),
/// beta lists the domain positions j with f(j) = f(j+1) (0 permitted).
struct OrdFactorization {
  std::vector<int> alpha;
  std::vector<int> beta;
  int dom_dim = 0;
  int cod_dim = 0;

  friend bool operator==(const OrdFactorization&, const OrdFactorization&) = default;
};

/// Unique factorization of a quasi-monotonic map as d_alpha o u_beta;
/// both multi-indices exclude 0.
struct QOrdFactorization {
  MultiIndex alpha;
  MultiIndex beta;
  int dom_dim = 0;
  int cod_dim = 0;

  friend bool operator==(const QOrdFactorization&, const QOrdFactorization&) = default;
};

/// Monotone-after-permutation split of an arbitrary map: pi is a word of
/// t-symbols, and the map factors as the Ord part applied after eval(pi).
struct GeneralFactorization {
  std::vector<int> alpha;
  std::vector<int> beta;
  Word pi;
  int dom_dim = 0;
  int cod_dim = 0;

  friend bool operator==(const GeneralFactorization&, const GeneralFactorization&) = default;
};

/// Monotonic injection [m - |alpha|] -> [m] whose image omits alpha.
FinMap monotone_injection_missing(int m, const std::vector<int>& alpha);

/// Monotonic surjection [n] -> [n - |beta|] with f(j) = f(j+1) iff j in beta.
FinMap monotone_surjection_repeating(int n, const std::vector<int>& beta);

OrdFactorization factor_monotone(const FinMap& f);
QOrdFactorization factor_qm(const FinMap& f);
GeneralFactorization factor_general(const FinMap& f);

FinMap recompose(const OrdFactorization& fac);
FinMap recompose(const QOrdFactorization& fac);
FinMap recompose(const GeneralFactorization& fac);

/// Pipeline spelling: s-block with decreasing indices, then d-block with
/// increasing indices.
Word to_word(const OrdFactorization& fac);

/// pi, then the Ord spelling.
Word to_word(const GeneralFactorization& fac);

/// Image of gamma under the transposition (i i+1), re-sorted.
MultiIndex t_act(int i, const MultiIndex& gamma);

/// The residual transposition left when t_i crosses the u-block of gamma:
/// absent when i or i+1 lies in gamma, otherwise t_{i'} with
/// i' = i - #{ j in gamma | j < i }. Requires i >= 1.
std::optional<Gen> t_tilde(int i, const MultiIndex& gamma);

/// One crossing step: t_i followed by the u-block of gamma equals the
/// u-block of t_act(i, gamma) followed by t_tilde(i, gamma).
std::pair<MultiIndex, std::optional<Gen>> push_t_through_u(int i, const MultiIndex& gamma);

/// Folds push_t_through_u over a word of t-symbols (all indices >= 1),
/// returning (gamma', pi') with
///   eval(pi ++ u-block(gamma)) = eval(u-block(gamma') ++ pi')
/// at every anchor where both sides typecheck. gamma' is the preimage of
/// gamma under eval(pi), and pi' again fixes 0.
std::pair<MultiIndex, Word> push_perm(const Word& pi, const MultiIndex& gamma);

/// Adjacent-transposition word for a permutation; eval(result) = p and the
/// length is at most n(n+1)/2. A permutation fixing 0 yields no t_0.
Word perm_to_word(const FinMap& p);

}  // namespace finsym

#endif  // FINSYM_FACTOR_HPP
