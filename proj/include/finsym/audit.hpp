#ifndef FINSYM_AUDIT_HPP
#define FINSYM_AUDIT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finsym/fin_map.hpp"
#include "finsym/rules.hpp"

namespace finsym {

struct Violation {
  std::string instance;
  std::optional<FinMap> lhs_value;
  std::optional<FinMap> rhs_value;
};

struct AuditReport {
  std::string family_or_check;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violations.empty(); }
};

/// All (m+1)^(n+1) value tables of maps [n] -> [m], lexicographic by table.
class MapRange {
 public:
  MapRange(int n, int m);

  class iterator {
   public:
    using value_type = FinMap;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, int m, bool done);

    FinMap operator*() const;
    iterator& operator++();
    iterator operator++(int);
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.table_ == b.table_);
    }

   private:
    int cod_ = 0;
    bool done_ = true;
    std::vector<int> table_;
  };

  iterator begin() const { return iterator(dom_, cod_, false); }
  iterator end() const { return iterator(dom_, cod_, true); }

 private:
  int dom_;
  int cod_;
};

std::uint64_t binomial(int n, int k);

/// (m+1)^(n+1)
std::uint64_t hom_size(int n, int m);

/// Number of quasi-monotonic maps [n] -> [m], counted through the
/// factorization pairs (alpha, beta) with matching middle dimension.
std::uint64_t count_qm(int n, int m);

/// Eval-checks a list of relation instances; reports every mismatch with
/// both value tables.
AuditReport check_instances(std::string_view name, const std::vector<RuleInstance>& instances);

AuditReport audit_family(std::string_view family, int max_dim);

/// For every n <= max_n, m <= max_m: the (alpha, beta) recompositions are
/// pairwise distinct, land in the expected class, cover exactly the
/// enumerated quasi-monotonic (resp. monotonic) maps, and the factorization
/// operations invert the recomposition.
AuditReport audit_unique_factorization(int max_n, int max_m);

/// Every map [n] -> [m] is reproduced by eval of a d/u/t word assembled from
/// its monotone-after-permutation split, and every permutation comes from
/// t-symbols alone with the full count of distinct results.
AuditReport audit_generation(int max_n, int max_m);

/// Exhausts multi-indices and t-words (indices >= 1) at each n <= max_n and
/// checks the push_perm contract.
AuditReport audit_push_perm(int max_n, int max_word_len = 4);

/// count_qm against the enumeration filter and the binomial closed form;
/// |Hom| against the enumeration.
AuditReport audit_counts(int max_n, int max_m);

/// All d/u words (no d_0) up to max_len at anchors <= max_anchor:
/// normalization stays within its declared step bound, preserves eval, is
/// idempotent, and lands on the canonical spelling of the factorization.
AuditReport audit_normal_forms(int max_len, int max_anchor);

}  // namespace finsym

#endif  // FINSYM_AUDIT_HPP
