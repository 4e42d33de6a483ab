#include "finsym/factor.hpp"

#include <algorithm>
#include <numeric>

namespace finsym {

namespace {

void check_index_set(const std::vector<int>& set, int lo, int hi, const char* what) {
  for (std::size_t p = 0; p < set.size(); ++p) {
    if (set[p] < lo || set[p] > hi) {
      throw DomainError(Errc::IndexOutOfRange, std::string(what) + " entry " + std::to_string(set[p]) +
                                                   " outside [" + std::to_string(lo) + ", " +
                                                   std::to_string(hi) + "]");
    }
    if (p + 1 < set.size() && set[p] >= set[p + 1]) {
      throw DomainError(Errc::BadMultiIndex, std::string(what) + " must be strictly increasing");
    }
  }
}

}  // namespace

FinMap monotone_injection_missing(int m, const std::vector<int>& alpha) {
  check_index_set(alpha, 0, m, "alpha");
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(m) + 1 - alpha.size());
  for (int q = 0; q <= m; ++q) {
    if (!std::binary_search(alpha.begin(), alpha.end(), q)) table.push_back(q);
  }
  return FinMap(m - static_cast<int>(alpha.size()), m, std::move(table));
}

FinMap monotone_surjection_repeating(int n, const std::vector<int>& beta) {
  check_index_set(beta, 0, n - 1, "beta");
  std::vector<int> table(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) {
    int below = static_cast<int>(std::lower_bound(beta.begin(), beta.end(), p) - beta.begin());
    table[static_cast<std::size_t>(p)] = p - below;
  }
  return FinMap(n, n - static_cast<int>(beta.size()), std::move(table));
}

OrdFactorization factor_monotone(const FinMap& f) {
  if (!classify(f).monotonic) {
    throw DomainError(Errc::NotMonotonic, to_string(f) + " is not monotonic");
  }
  OrdFactorization fac;
  fac.dom_dim = f.dom_dim();
  fac.cod_dim = f.cod_dim();
  for (int j = 0; j < f.dom_dim(); ++j) {
    if (f(j) == f(j + 1)) fac.beta.push_back(j);
  }
  std::vector<bool> hit(static_cast<std::size_t>(f.cod_dim()) + 1, false);
  for (int p = 0; p <= f.dom_dim(); ++p) hit[static_cast<std::size_t>(f(p))] = true;
  for (int q = 0; q <= f.cod_dim(); ++q) {
    if (!hit[static_cast<std::size_t>(q)]) fac.alpha.push_back(q);
  }
  return fac;
}

QOrdFactorization factor_qm(const FinMap& f) {
  MapClass c = classify(f);
  if (!c.quasi_monotonic) {
    throw DomainError(Errc::NotQuasiMonotonic,
                      to_string(f) + (c.fixes_zero ? " fails QM2 (not strictly increasing outside the zero set)"
                                                   : " fails QM1 (f(0) != 0)"));
  }
  QOrdFactorization fac;
  fac.dom_dim = f.dom_dim();
  fac.cod_dim = f.cod_dim();

  std::vector<int> beta;
  for (int p = 1; p <= f.dom_dim(); ++p) {
    if (f(p) == 0) beta.push_back(p);
  }
  std::vector<bool> hit(static_cast<std::size_t>(f.cod_dim()) + 1, false);
  for (int p = 0; p <= f.dom_dim(); ++p) hit[static_cast<std::size_t>(f(p))] = true;
  std::vector<int> alpha;
  for (int q = 1; q <= f.cod_dim(); ++q) {
    if (!hit[static_cast<std::size_t>(q)]) alpha.push_back(q);
  }
  fac.beta = MultiIndex(std::move(beta));
  fac.alpha = MultiIndex(std::move(alpha));
  return fac;
}

GeneralFactorization factor_general(const FinMap& f) {
  const int n = f.dom_dim();
  std::vector<int> order(static_cast<std::size_t>(n) + 1);
  std::iota(order.begin(), order.end(), 0);
  // stable: points with equal value keep their original relative order
  std::stable_sort(order.begin(), order.end(), [&f](int a, int b) { return f(a) < f(b); });

  FinMap sigma(n, n, std::move(order));
  FinMap g = compose(f, sigma);
  OrdFactorization ord = factor_monotone(g);

  GeneralFactorization fac;
  fac.alpha = std::move(ord.alpha);
  fac.beta = std::move(ord.beta);
  fac.pi = perm_to_word(invert(sigma));
  fac.dom_dim = n;
  fac.cod_dim = f.cod_dim();
  return fac;
}

FinMap recompose(const OrdFactorization& fac) {
  return compose(monotone_injection_missing(fac.cod_dim, fac.alpha),
                 monotone_surjection_repeating(fac.dom_dim, fac.beta));
}

FinMap recompose(const QOrdFactorization& fac) {
  return compose(multi_d(fac.cod_dim, fac.alpha), multi_u(fac.dom_dim, fac.beta));
}

FinMap recompose(const GeneralFactorization& fac) {
  OrdFactorization ord{fac.alpha, fac.beta, fac.dom_dim, fac.cod_dim};
  return compose(recompose(ord), eval(fac.pi, fac.dom_dim));
}

Word to_word(const OrdFactorization& fac) {
  Word word;
  word.reserve(fac.alpha.size() + fac.beta.size());
  for (auto it = fac.beta.rbegin(); it != fac.beta.rend(); ++it) {
    word.emplace_back(GenKind::s, *it);
  }
  for (int i : fac.alpha) word.emplace_back(GenKind::d, i);
  return word;
}

Word to_word(const GeneralFactorization& fac) {
  Word word = fac.pi;
  OrdFactorization ord{fac.alpha, fac.beta, fac.dom_dim, fac.cod_dim};
  Word tail = to_word(ord);
  word.insert(word.end(), tail.begin(), tail.end());
  return word;
}

MultiIndex t_act(int i, const MultiIndex& gamma) {
  if (i < 0) {
    throw DomainError(Errc::IndexOutOfRange, "t_act needs i >= 0");
  }
  std::vector<int> out;
  out.reserve(gamma.size());
  for (int g : gamma) {
    int v = g == i ? i + 1 : (g == i + 1 ? i : g);
    if (v == 0) {
      throw DomainError(Errc::ZeroExcluded, "t_0 would map 1 into the excluded index 0");
    }
    out.push_back(v);
  }
  return MultiIndex::sorted(std::move(out));
}

std::optional<Gen> t_tilde(int i, const MultiIndex& gamma) {
  if (i < 1) {
    throw DomainError(Errc::IndexOutOfRange, "t_tilde needs i >= 1");
  }
  if (gamma.contains(i) || gamma.contains(i + 1)) return std::nullopt;
  return Gen(GenKind::t, i - gamma.count_below(i));
}

std::pair<MultiIndex, std::optional<Gen>> push_t_through_u(int i, const MultiIndex& gamma) {
  if (i < 1) {
    throw DomainError(Errc::IndexOutOfRange, "push_t_through_u needs i >= 1");
  }
  return {t_act(i, gamma), t_tilde(i, gamma)};
}

std::pair<MultiIndex, Word> push_perm(const Word& pi, const MultiIndex& gamma) {
  for (const Gen& g : pi) {
    if (g.kind != GenKind::t) {
      throw DomainError(Errc::NotZeroFixing,
                        "push_perm expects a word of t-symbols, got " + render(Word{g}));
    }
    if (g.index == 0) {
      throw DomainError(Errc::ContainsT0, "t_0 cannot be pushed through a u-block");
    }
  }
  // The symbol adjacent to the u-block crosses first, so fold from the right;
  // each residual transposition lands in front of those produced earlier.
  MultiIndex cur = gamma;
  Word tail;
  for (auto it = pi.rbegin(); it != pi.rend(); ++it) {
    auto [next, tau] = push_t_through_u(it->index, cur);
    cur = std::move(next);
    if (tau) tail.insert(tail.begin(), *tau);
  }
  return {std::move(cur), std::move(tail)};
}

Word perm_to_word(const FinMap& p) {
  if (!classify(p).permutation) {
    throw DomainError(Errc::NotAPermutation, to_string(p) + " is not a permutation");
  }
  std::vector<int> tbl(p.table().begin(), p.table().end());
  Word word;
  // bubble passes; swapping entries j and j+1 precomposes with t_j
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t j = 0; j + 1 < tbl.size(); ++j) {
      if (tbl[j] > tbl[j + 1]) {
        std::swap(tbl[j], tbl[j + 1]);
        word.emplace_back(GenKind::t, static_cast<int>(j));
        dirty = true;
      }
    }
  }
  return word;
}

}  // namespace finsym
