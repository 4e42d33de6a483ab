#include "finsym/fin_map.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace finsym {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadToken: return "BadToken";
    case Errc::InvalidInverse: return "InvalidInverse";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BadMultiIndex: return "BadMultiIndex";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::DimMismatch: return "DimMismatch";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::StageIndexError: return "StageIndexError";
    case Errc::NegativeDim: return "NegativeDim";
    case Errc::ForbiddenSymbol: return "ForbiddenSymbol";
    case Errc::NotMonotonic: return "NotMonotonic";
    case Errc::NotQuasiMonotonic: return "NotQuasiMonotonic";
    case Errc::ZeroExcluded: return "ZeroExcluded";
    case Errc::ContainsT0: return "ContainsT0";
    case Errc::NotZeroFixing: return "NotZeroFixing";
    case Errc::UnknownFamily: return "UnknownFamily";
  }
  return "UnknownError";
}

const char* kind_letter(GenKind k) {
  switch (k) {
    case GenKind::d: return "d";
    case GenKind::s: return "s";
    case GenKind::t: return "t";
    case GenKind::u: return "u";
    case GenKind::z: return "z";
    case GenKind::zinv: return "z'";
    case GenKind::r: return "r";
  }
  return "?";
}

FinMap::FinMap(int dom_dim, int cod_dim, std::vector<int> table) : cod_(cod_dim), table_(std::move(table)) {
  if (dom_dim < 0 || cod_dim < 0) {
    throw DomainError(Errc::NegativeDim, "dimensions must be >= 0");
  }
  if (table_.size() != static_cast<std::size_t>(dom_dim) + 1) {
    throw DomainError(Errc::LengthMismatch, "table has " + std::to_string(table_.size()) +
                                                " entries, expected " + std::to_string(dom_dim + 1));
  }
  for (std::size_t p = 0; p < table_.size(); ++p) {
    if (table_[p] < 0 || table_[p] > cod_dim) {
      throw DomainError(Errc::EntryOutOfRange, "entry " + std::to_string(table_[p]) + " at position " +
                                                   std::to_string(p) + " outside [0, " +
                                                   std::to_string(cod_dim) + "]");
    }
  }
}

std::string to_string(const FinMap& f) {
  std::ostringstream os;
  os << f;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FinMap& f) {
  os << '[';
  for (int p = 0; p <= f.dom_dim(); ++p) {
    if (p > 0) os << ',';
    os << f(p);
  }
  os << "]:" << f.dom_dim() << "->" << f.cod_dim();
  return os;
}

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t p = 0; p < indices_.size(); ++p) {
    if (indices_[p] < 1) {
      throw DomainError(Errc::BadMultiIndex, "multi-index entries must be >= 1");
    }
    if (p + 1 < indices_.size() && indices_[p] >= indices_[p + 1]) {
      throw DomainError(Errc::BadMultiIndex, "multi-index must be strictly increasing");
    }
  }
}

MultiIndex MultiIndex::sorted(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  return MultiIndex(std::move(indices));
}

bool MultiIndex::contains(int i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

int MultiIndex::count_below(int p) const {
  return static_cast<int>(std::lower_bound(indices_.begin(), indices_.end(), p) - indices_.begin());
}

std::string to_string(const MultiIndex& mi) {
  std::string out = "{";
  for (std::size_t p = 0; p < mi.size(); ++p) {
    if (p > 0) out += ',';
    out += std::to_string(mi.indices()[p]);
  }
  out += '}';
  return out;
}

FinMap make_map(int dom_dim, int cod_dim, std::vector<int> table) {
  return FinMap(dom_dim, cod_dim, std::move(table));
}

FinMap identity(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) + 1);
  std::iota(table.begin(), table.end(), 0);
  return FinMap(n, n, std::move(table));
}

FinMap compose(const FinMap& outer, const FinMap& inner) {
  if (inner.cod_dim() != outer.dom_dim()) {
    throw DomainError(Errc::DimMismatch, "inner codomain [" + std::to_string(inner.cod_dim()) +
                                             "] != outer domain [" + std::to_string(outer.dom_dim()) + "]");
  }
  std::vector<int> table(static_cast<std::size_t>(inner.dom_dim()) + 1);
  for (int p = 0; p <= inner.dom_dim(); ++p) {
    table[static_cast<std::size_t>(p)] = outer(inner(p));
  }
  return FinMap(inner.dom_dim(), outer.cod_dim(), std::move(table));
}

namespace {

[[noreturn]] void bad_index(GenKind kind, int n, int i) {
  throw DomainError(Errc::IndexOutOfRange, std::string(kind_letter(kind)) + std::to_string(i) +
                                               " is not defined at dimension " + std::to_string(n));
}

}  // namespace

FinMap generator(GenKind kind, int n, int i) {
  switch (kind) {
    case GenKind::d: {
      if (n < 1 || i < 0 || i > n) bad_index(kind, n, i);
      std::vector<int> table(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) table[static_cast<std::size_t>(k)] = k < i ? k : k + 1;
      return FinMap(n - 1, n, std::move(table));
    }
    case GenKind::s: {
      if (n < 0 || i < 0 || i > n) bad_index(kind, n, i);
      std::vector<int> table(static_cast<std::size_t>(n) + 2);
      for (int k = 0; k <= n + 1; ++k) table[static_cast<std::size_t>(k)] = k <= i ? k : k - 1;
      return FinMap(n + 1, n, std::move(table));
    }
    case GenKind::t: {
      if (n < 1 || i < 0 || i > n - 1) bad_index(kind, n, i);
      std::vector<int> table(static_cast<std::size_t>(n) + 1);
      std::iota(table.begin(), table.end(), 0);
      std::swap(table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(i) + 1]);
      return FinMap(n, n, std::move(table));
    }
    case GenKind::u: {
      if (n < 0 || i < 1 || i > n + 1) bad_index(kind, n, i);
      std::vector<int> table(static_cast<std::size_t>(n) + 2);
      for (int k = 0; k <= n + 1; ++k) {
        int v = 0;
        if (k != 0 && k != i) v = k < i ? k : k - 1;
        table[static_cast<std::size_t>(k)] = v;
      }
      return FinMap(n + 1, n, std::move(table));
    }
    case GenKind::z: {
      if (n < 0 || i < 0 || i > n) bad_index(kind, n, i);
      std::vector<int> table(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) {
        table[static_cast<std::size_t>(k)] = k < i ? k + 1 : (k == i ? 0 : k);
      }
      return FinMap(n, n, std::move(table));
    }
    case GenKind::zinv: {
      if (n < 0 || i < 0 || i > n) bad_index(kind, n, i);
      std::vector<int> table(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) {
        table[static_cast<std::size_t>(k)] = k == 0 ? i : (k <= i ? k - 1 : k);
      }
      return FinMap(n, n, std::move(table));
    }
    case GenKind::r: {
      if (n < 1 || i < 1 || i > n) bad_index(kind, n, i);
      std::vector<int> table(static_cast<std::size_t>(n) + 1);
      for (int k = 0; k <= n; ++k) table[static_cast<std::size_t>(k)] = (k == 0 || k == i) ? 0 : k;
      return FinMap(n, n, std::move(table));
    }
  }
  bad_index(kind, n, i);
}

MapClass classify(const FinMap& f) {
  MapClass c;
  const int n = f.dom_dim();
  const int m = f.cod_dim();

  c.fixes_zero = f(0) == 0;

  c.monotonic = true;
  for (int p = 0; p < n; ++p) {
    if (f(p) > f(p + 1)) {
      c.monotonic = false;
      break;
    }
  }

  // QM1: f(0) = 0.  QM2: strictly increasing outside f^{-1}(0).
  c.quasi_monotonic = c.fixes_zero;
  if (c.quasi_monotonic) {
    int last_nonzero = -1;
    for (int p = 0; p <= n; ++p) {
      if (f(p) == 0) continue;
      if (f(p) <= last_nonzero) {
        c.quasi_monotonic = false;
        break;
      }
      last_nonzero = f(p);
    }
  }

  std::vector<int> hits(static_cast<std::size_t>(m) + 1, 0);
  for (int p = 0; p <= n; ++p) ++hits[static_cast<std::size_t>(f(p))];
  c.injective = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
  c.surjective = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
  c.permutation = c.injective && c.surjective;

  return c;
}

FinMap invert(const FinMap& f) {
  if (!classify(f).permutation) {
    throw DomainError(Errc::NotAPermutation, "cannot invert " + to_string(f));
  }
  std::vector<int> table(static_cast<std::size_t>(f.dom_dim()) + 1);
  for (int p = 0; p <= f.dom_dim(); ++p) table[static_cast<std::size_t>(f(p))] = p;
  return FinMap(f.dom_dim(), f.cod_dim(), std::move(table));
}

FinMap multi_u(int n, const MultiIndex& beta) {
  if (!beta.empty() && beta.indices().back() > n) {
    throw DomainError(Errc::IndexOutOfRange,
                      "multi-index " + to_string(beta) + " exceeds dimension " + std::to_string(n));
  }
  const int k = static_cast<int>(beta.size());
  std::vector<int> table(static_cast<std::size_t>(n) + 1);
  for (int p = 0; p <= n; ++p) {
    table[static_cast<std::size_t>(p)] = (p == 0 || beta.contains(p)) ? 0 : p - beta.count_below(p);
  }
  return FinMap(n, n - k, std::move(table));
}

FinMap multi_d(int n, const MultiIndex& alpha) {
  if (!alpha.empty() && alpha.indices().back() > n) {
    throw DomainError(Errc::IndexOutOfRange,
                      "multi-index " + to_string(alpha) + " exceeds dimension " + std::to_string(n));
  }
  const int k = static_cast<int>(alpha.size());
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n - k) + 1);
  for (int q = 0; q <= n; ++q) {
    if (!alpha.contains(q)) table.push_back(q);
  }
  return FinMap(n - k, n, std::move(table));
}

}  // namespace finsym
