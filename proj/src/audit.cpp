#include "finsym/audit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finsym/factor.hpp"

namespace finsym {

namespace {

class Stopwatch {
 public:
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start_);
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

}  // namespace

MapRange::MapRange(int n, int m) : dom_(n), cod_(m) {
  if (n < 0 || m < 0) {
    throw DomainError(Errc::NegativeDim, "enumeration dimensions must be >= 0");
  }
}

MapRange::iterator::iterator(int n, int m, bool done) : cod_(m), done_(done) {
  if (!done_) table_.assign(static_cast<std::size_t>(n) + 1, 0);
}

FinMap MapRange::iterator::operator*() const {
  return FinMap(static_cast<int>(table_.size()) - 1, cod_, table_);
}

MapRange::iterator& MapRange::iterator::operator++() {
  // odometer with the rightmost entry least significant: lexicographic order
  for (std::size_t p = table_.size(); p-- > 0;) {
    if (table_[p] < cod_) {
      ++table_[p];
      return *this;
    }
    table_[p] = 0;
  }
  done_ = true;
  return *this;
}

MapRange::iterator MapRange::iterator::operator++(int) {
  iterator old = *this;
  ++*this;
  return old;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int p = 0; p < k; ++p) {
    result = result * static_cast<std::uint64_t>(n - p) / static_cast<std::uint64_t>(p + 1);
  }
  return result;
}

std::uint64_t hom_size(int n, int m) {
  std::uint64_t result = 1;
  for (int p = 0; p <= n; ++p) result *= static_cast<std::uint64_t>(m) + 1;
  return result;
}

std::uint64_t count_qm(int n, int m) {
  // pairs (alpha subset of {1..m}, beta subset of {1..n}) with equal middle
  // dimension n - |beta| = m - |alpha|
  std::uint64_t total = 0;
  for (int b = 0; b <= n; ++b) {
    int a = m - n + b;
    if (a < 0 || a > m) continue;
    total += binomial(n, b) * binomial(m, a);
  }
  return total;
}

AuditReport check_instances(std::string_view name, const std::vector<RuleInstance>& instances) {
  Stopwatch watch;
  AuditReport report;
  report.family_or_check = std::string(name);
  for (const RuleInstance& inst : instances) {
    ++report.instances_checked;
    std::string desc = inst.family + ": " + inst.case_label + " @ anchor " +
                       std::to_string(inst.anchor_dim) + " (\"" + render(inst.lhs) + "\" vs \"" +
                       render(inst.rhs) + "\")";
    try {
      FinMap lhs = eval(inst.lhs, inst.anchor_dim);
      FinMap rhs = eval(inst.rhs, inst.anchor_dim);
      if (lhs != rhs) {
        report.violations.push_back({std::move(desc), std::move(lhs), std::move(rhs)});
      }
    } catch (const DomainError& e) {
      report.violations.push_back({desc + " failed to evaluate: " + e.what(), std::nullopt, std::nullopt});
    }
  }
  report.elapsed = watch.elapsed();
  return report;
}

AuditReport audit_family(std::string_view family, int max_dim) {
  return check_instances(family, instantiate(family, max_dim));
}

namespace {

std::vector<std::vector<int>> subsets_of_range(int lo, int hi) {
  std::vector<std::vector<int>> out;
  const int width = hi - lo + 1;
  if (width <= 0) {
    out.push_back({});
    return out;
  }
  for (unsigned mask = 0; mask < (1u << width); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < width; ++b) {
      if (mask & (1u << b)) subset.push_back(lo + b);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

void report_violation(AuditReport& report, std::string desc, std::optional<FinMap> lhs = std::nullopt,
                      std::optional<FinMap> rhs = std::nullopt) {
  report.violations.push_back({std::move(desc), std::move(lhs), std::move(rhs)});
}

// One (n, m) cell of the bijection scan, shared by the qOrd and Ord sides.
template <typename BuildFn, typename IsInClassFn, typename RefactorsFn>
void scan_factorization_cell(AuditReport& report, int n, int m, const char* tag,
                             const std::vector<std::vector<int>>& alphas,
                             const std::vector<std::vector<int>>& betas, BuildFn build,
                             IsInClassFn in_class, RefactorsFn refactors) {
  std::set<FinMap> hit;
  std::uint64_t pairs = 0;
  for (const auto& alpha : alphas) {
    for (const auto& beta : betas) {
      if (n - static_cast<int>(beta.size()) != m - static_cast<int>(alpha.size())) continue;
      if (n - static_cast<int>(beta.size()) < 0) continue;
      ++pairs;
      ++report.instances_checked;
      FinMap f = build(alpha, beta);
      std::string where = std::string(tag) + " cell n=" + std::to_string(n) + " m=" + std::to_string(m);
      if (!in_class(f)) {
        report_violation(report, where + ": recomposition leaves the class", f);
        continue;
      }
      if (!hit.insert(f).second) {
        report_violation(report, where + ": two index pairs recompose to the same map", f);
        continue;
      }
      if (!refactors(f, alpha, beta)) {
        report_violation(report, where + ": factoring does not return the original indices", f);
      }
    }
  }
  std::uint64_t expected = 0;
  for (const FinMap& f : MapRange(n, m)) {
    ++report.instances_checked;
    if (!in_class(f)) continue;
    ++expected;
    if (!hit.count(f)) {
      report_violation(report,
                       std::string(tag) + " cell n=" + std::to_string(n) + " m=" + std::to_string(m) +
                           ": map not reached by any recomposition",
                       f);
    }
  }
  if (expected != pairs) {
    report_violation(report, std::string(tag) + " cell n=" + std::to_string(n) + " m=" +
                                 std::to_string(m) + ": " + std::to_string(pairs) + " pairs vs " +
                                 std::to_string(expected) + " maps in the class");
  }
}

}  // namespace

AuditReport audit_unique_factorization(int max_n, int max_m) {
  Stopwatch watch;
  AuditReport report;
  report.family_or_check = "factorization";
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      scan_factorization_cell(
          report, n, m, "qOrd", subsets_of_range(1, m), subsets_of_range(1, n),
          [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
            return compose(multi_d(m, MultiIndex(alpha)), multi_u(n, MultiIndex(beta)));
          },
          [](const FinMap& f) { return classify(f).quasi_monotonic; },
          [&](const FinMap& f, const std::vector<int>& alpha, const std::vector<int>& beta) {
            QOrdFactorization fac = factor_qm(f);
            return fac.alpha.indices() == alpha && fac.beta.indices() == beta &&
                   recompose(fac) == f;
          });
      scan_factorization_cell(
          report, n, m, "Ord", subsets_of_range(0, m), subsets_of_range(0, n - 1),
          [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
            return compose(monotone_injection_missing(m, alpha), monotone_surjection_repeating(n, beta));
          },
          [](const FinMap& f) { return classify(f).monotonic; },
          [&](const FinMap& f, const std::vector<int>& alpha, const std::vector<int>& beta) {
            OrdFactorization fac = factor_monotone(f);
            return fac.alpha == alpha && fac.beta == beta && recompose(fac) == f;
          });
    }
  }
  report.elapsed = watch.elapsed();
  return report;
}

AuditReport audit_generation(int max_n, int max_m) {
  Stopwatch watch;
  AuditReport report;
  report.family_or_check = "generation";
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      for (const FinMap& f : MapRange(n, m)) {
        ++report.instances_checked;
        GeneralFactorization fac = factor_general(f);
        Word via_s = to_word(fac);
        Word via_u = translate(via_s, Target::du);
        for (const Gen& g : via_u) {
          if (g.kind != GenKind::d && g.kind != GenKind::u && g.kind != GenKind::t) {
            report_violation(report, "translated word leaves the d/u/t alphabet: " + render(via_u), f);
            break;
          }
        }
        FinMap back = eval(via_u, n);
        if (back != f) {
          report_violation(report,
                           "word \"" + render(via_u) + "\" does not evaluate back to its map", f, back);
        }
      }
    }
  }
  // permutations are reproduced from t-symbols alone
  for (int n = 0; n <= max_n; ++n) {
    std::set<FinMap> seen;
    std::vector<int> table(static_cast<std::size_t>(n) + 1);
    std::iota(table.begin(), table.end(), 0);
    std::uint64_t total = 0;
    do {
      ++total;
      ++report.instances_checked;
      FinMap f(n, n, table);
      GeneralFactorization fac = factor_general(f);
      if (!fac.alpha.empty() || !fac.beta.empty()) {
        report_violation(report, "permutation split has a nontrivial monotone part", f);
        continue;
      }
      if (!std::all_of(fac.pi.begin(), fac.pi.end(),
                       [](const Gen& g) { return g.kind == GenKind::t; })) {
        report_violation(report, "permutation word contains a non-transposition: " + render(fac.pi), f);
        continue;
      }
      seen.insert(eval(fac.pi, n));
    } while (std::next_permutation(table.begin(), table.end()));
    std::uint64_t expected = 1;
    for (int k = 2; k <= n + 1; ++k) expected *= static_cast<std::uint64_t>(k);
    if (seen.size() != total || total != expected) {
      report_violation(report, "permutations of [" + std::to_string(n) + "]: " +
                                   std::to_string(seen.size()) + " distinct evals from " +
                                   std::to_string(total) + " words, expected " + std::to_string(expected));
    }
  }
  report.elapsed = watch.elapsed();
  return report;
}

namespace {

void push_perm_case(AuditReport& report, int n, const Word& pi, const MultiIndex& gamma) {
  ++report.instances_checked;
  const std::string desc = "push_perm n=" + std::to_string(n) + " pi=\"" + render(pi) + "\" gamma=" +
                           to_string(gamma);
  auto [gamma2, pi2] = push_perm(pi, gamma);

  Word lhs = pi;
  Word ublock = canonical_spelling(MultiIndex{}, gamma);
  lhs.insert(lhs.end(), ublock.begin(), ublock.end());
  Word rhs = canonical_spelling(MultiIndex{}, gamma2);
  rhs.insert(rhs.end(), pi2.begin(), pi2.end());

  FinMap left = eval(lhs, n);
  FinMap right = eval(rhs, n);
  if (left != right) {
    report_violation(report, desc + ": the two spellings differ", left, right);
    return;
  }
  for (const Gen& g : pi2) {
    if (g.kind != GenKind::t || g.index < 1) {
      report_violation(report, desc + ": residual word is not over t with index >= 1: " + render(pi2));
      return;
    }
  }
  // gamma' must be the preimage of gamma under the permutation of pi
  FinMap perm = invert(eval(pi, n));
  std::vector<int> mapped;
  for (int g : gamma) mapped.push_back(perm(g));
  if (MultiIndex::sorted(std::move(mapped)) != gamma2) {
    report_violation(report, desc + ": new multi-index is not the preimage, got " + to_string(gamma2));
  }
}

void enumerate_t_words(int n, int max_len, Word& pi, const std::vector<MultiIndex>& gammas,
                       AuditReport& report) {
  for (const MultiIndex& gamma : gammas) push_perm_case(report, n, pi, gamma);
  if (static_cast<int>(pi.size()) >= max_len) return;
  for (int i = 1; i <= n - 1; ++i) {
    pi.emplace_back(GenKind::t, i);
    enumerate_t_words(n, max_len, pi, gammas, report);
    pi.pop_back();
  }
}

}  // namespace

AuditReport audit_push_perm(int max_n, int max_word_len) {
  Stopwatch watch;
  AuditReport report;
  report.family_or_check = "push-perm";
  for (int n = 1; n <= max_n; ++n) {
    std::vector<MultiIndex> gammas;
    for (const auto& subset : subsets_of_range(1, n)) gammas.emplace_back(subset);
    Word pi;
    enumerate_t_words(n, max_word_len, pi, gammas, report);
  }
  report.elapsed = watch.elapsed();
  return report;
}

AuditReport audit_counts(int max_n, int max_m) {
  Stopwatch watch;
  AuditReport report;
  report.family_or_check = "counts";
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_m; ++m) {
      ++report.instances_checked;
      std::uint64_t filtered = 0;
      std::uint64_t total = 0;
      for (const FinMap& f : MapRange(n, m)) {
        ++total;
        if (classify(f).quasi_monotonic) ++filtered;
      }
      const std::uint64_t counted = count_qm(n, m);
      const std::uint64_t closed = binomial(n + m, n);
      if (counted != filtered || counted != closed) {
        report_violation(report, "count_qm(" + std::to_string(n) + ", " + std::to_string(m) + ") = " +
                                     std::to_string(counted) + ", filter = " + std::to_string(filtered) +
                                     ", C(n+m,n) = " + std::to_string(closed));
      }
      if (total != hom_size(n, m)) {
        report_violation(report, "|Hom([" + std::to_string(n) + "],[" + std::to_string(m) + "])| = " +
                                     std::to_string(total) + ", expected " +
                                     std::to_string(hom_size(n, m)));
      }
    }
  }
  report.elapsed = watch.elapsed();
  return report;
}

namespace {

void check_normal_form(AuditReport& report, const Word& word, int anchor, const FinMap& value) {
  ++report.instances_checked;
  NormalizeStats stats;
  try {
    stats = normalize_qord_traced(word);
  } catch (const std::logic_error& e) {
    report_violation(report, std::string("\"") + render(word) + "\": " + e.what());
    return;
  }
  if (stats.steps > stats.bound) {
    report_violation(report, "\"" + render(word) + "\": " + std::to_string(stats.steps) +
                                 " steps exceed the bound " + std::to_string(stats.bound));
    return;
  }
  const Word& nf = stats.normal_form;
  FinMap after = eval(nf, anchor);
  if (after != value) {
    report_violation(report, "\"" + render(word) + "\" -> \"" + render(nf) + "\" changes the map",
                     value, after);
    return;
  }
  if (rewrite_step(nf)) {
    report_violation(report, "normal form \"" + render(nf) + "\" still has a redex");
    return;
  }
  QOrdFactorization fac = factor_qm(value);
  Word canon = canonical_spelling(fac.alpha, fac.beta);
  if (nf != canon) {
    report_violation(report, "\"" + render(word) + "\" normalizes to \"" + render(nf) +
                                 "\" but the factorization spells \"" + render(canon) + "\"");
  }
}

void enumerate_qord_words(AuditReport& report, Word& word, int stage_dim, const FinMap& value,
                          int anchor, int remaining) {
  check_normal_form(report, word, anchor, value);
  if (remaining == 0) return;
  for (int i = 1; i <= stage_dim + 1; ++i) {
    word.emplace_back(GenKind::d, i);
    enumerate_qord_words(report, word, stage_dim + 1,
                         compose(generator(GenKind::d, stage_dim + 1, i), value), anchor, remaining - 1);
    word.pop_back();
  }
  for (int i = 1; i <= stage_dim; ++i) {
    word.emplace_back(GenKind::u, i);
    enumerate_qord_words(report, word, stage_dim - 1,
                         compose(generator(GenKind::u, stage_dim - 1, i), value), anchor, remaining - 1);
    word.pop_back();
  }
}

}  // namespace

AuditReport audit_normal_forms(int max_len, int max_anchor) {
  Stopwatch watch;
  AuditReport report;
  report.family_or_check = "normal-form";
  for (int anchor = 0; anchor <= max_anchor; ++anchor) {
    Word word;
    enumerate_qord_words(report, word, anchor, identity(anchor), anchor, max_len);
  }
  report.elapsed = watch.elapsed();
  return report;
}

}  // namespace finsym
