#include "finsym/rules.hpp"

#include <cstdlib>
#include <stdexcept>

#include "finsym/factor.hpp"

namespace finsym {

namespace {

Gen D(int i) { return Gen(GenKind::d, i); }
Gen S(int i) { return Gen(GenKind::s, i); }
Gen T(int i) { return Gen(GenKind::t, i); }
Gen U(int i) { return Gen(GenKind::u, i); }
Gen Z(int i) { return Gen(GenKind::z, i); }
Gen ZI(int i) { return Gen(GenKind::zinv, i); }

struct Row {
  const char* label;
  int arity;  // number of free indices (0, 1 or 2)
  bool (*cond)(int, int);
  Word (*lhs)(int, int);
  Word (*rhs)(int, int);
};

bool always(int, int) { return true; }

// The monotonic-category rows are printed for classical composition, so
// their pipeline words run right-to-left relative to the printed order.
const Row kCosimplicialRows[] = {
    {"d_i d_j = d_{j+1} d_i (i <= j)", 2, [](int i, int j) { return i <= j; },
     [](int i, int j) { return Word{D(j), D(i)}; }, [](int i, int j) { return Word{D(i), D(j + 1)}; }},
    {"d_i d_j = d_j d_{i-1} (i > j)", 2, [](int i, int j) { return i > j; },
     [](int i, int j) { return Word{D(j), D(i)}; }, [](int i, int j) { return Word{D(i - 1), D(j)}; }},
    {"d_i s_j = s_{j+1} d_i (i <= j)", 2, [](int i, int j) { return i <= j; },
     [](int i, int j) { return Word{S(j), D(i)}; }, [](int i, int j) { return Word{D(i), S(j + 1)}; }},
    {"d_i s_j = s_j d_{i+1} (i > j)", 2, [](int i, int j) { return i > j; },
     [](int i, int j) { return Word{S(j), D(i)}; }, [](int i, int j) { return Word{D(i + 1), S(j)}; }},
    {"s_i d_j = d_{j-1} s_i (i <= j-2)", 2, [](int i, int j) { return i <= j - 2; },
     [](int i, int j) { return Word{D(j), S(i)}; }, [](int i, int j) { return Word{S(i), D(j - 1)}; }},
    {"s_i d_j = id (i = j-1 or j)", 2, [](int i, int j) { return i == j - 1 || i == j; },
     [](int i, int j) { return Word{D(j), S(i)}; }, [](int, int) { return Word{}; }},
    {"s_i d_j = d_j s_{i-1} (i >= j+1)", 2, [](int i, int j) { return i >= j + 1; },
     [](int i, int j) { return Word{D(j), S(i)}; }, [](int i, int j) { return Word{S(i - 1), D(j)}; }},
    {"s_i s_j = s_{j-1} s_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{S(j), S(i)}; }, [](int i, int j) { return Word{S(i), S(j - 1)}; }},
    {"s_i s_j = s_j s_{i+1} (i >= j)", 2, [](int i, int j) { return i >= j; },
     [](int i, int j) { return Word{S(j), S(i)}; }, [](int i, int j) { return Word{S(i + 1), S(j)}; }},
};

const Row kSimplicialDS[] = {
    {"d_i d_j = d_{j-1} d_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{D(i), D(j)}; }, [](int i, int j) { return Word{D(j - 1), D(i)}; }},
    {"d_i d_j = d_j d_{i+1} (i >= j)", 2, [](int i, int j) { return i >= j; },
     [](int i, int j) { return Word{D(i), D(j)}; }, [](int i, int j) { return Word{D(j), D(i + 1)}; }},
    {"s_i s_j = s_{j+1} s_i (i <= j)", 2, [](int i, int j) { return i <= j; },
     [](int i, int j) { return Word{S(i), S(j)}; }, [](int i, int j) { return Word{S(j + 1), S(i)}; }},
    {"s_i s_j = s_j s_{i-1} (i > j)", 2, [](int i, int j) { return i > j; },
     [](int i, int j) { return Word{S(i), S(j)}; }, [](int i, int j) { return Word{S(j), S(i - 1)}; }},
    {"d_i s_j = s_{j-1} d_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{D(i), S(j)}; }, [](int i, int j) { return Word{S(j - 1), D(i)}; }},
    {"d_i s_j = id (i = j or j+1)", 2, [](int i, int j) { return i == j || i == j + 1; },
     [](int i, int j) { return Word{D(i), S(j)}; }, [](int, int) { return Word{}; }},
    {"d_i s_j = s_j d_{i-1} (i >= j+2)", 2, [](int i, int j) { return i >= j + 2; },
     [](int i, int j) { return Word{D(i), S(j)}; }, [](int i, int j) { return Word{S(j), D(i - 1)}; }},
    {"s_i d_j = d_{j+1} s_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{S(i), D(j)}; }, [](int i, int j) { return Word{D(j + 1), S(i)}; }},
    {"s_i d_j = d_j s_{i+1} (i >= j)", 2, [](int i, int j) { return i >= j; },
     [](int i, int j) { return Word{S(i), D(j)}; }, [](int i, int j) { return Word{D(j), S(i + 1)}; }},
};

const Row kMooreRows[] = {
    {"t_i t_i = id", 1, always, [](int i, int) { return Word{T(i), T(i)}; }, [](int, int) { return Word{}; }},
    {"t_i t_j = t_j t_i (|i-j| >= 2)", 2, [](int i, int j) { return std::abs(i - j) >= 2; },
     [](int i, int j) { return Word{T(i), T(j)}; }, [](int i, int j) { return Word{T(j), T(i)}; }},
    {"t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}", 1, always,
     [](int i, int) { return Word{T(i), T(i + 1), T(i)}; },
     [](int i, int) { return Word{T(i + 1), T(i), T(i + 1)}; }},
};

const Row kTransRows[] = {
    {"t_i t_j = id (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{T(i), T(j)}; }, [](int, int) { return Word{}; }},
    {"t_i t_j = t_j t_i (|i-j| >= 2)", 2, [](int i, int j) { return std::abs(i - j) >= 2; },
     [](int i, int j) { return Word{T(i), T(j)}; }, [](int i, int j) { return Word{T(j), T(i)}; }},
    {"t_i t_j = (t_j t_i)^2 (|i-j| = 1)", 2, [](int i, int j) { return std::abs(i - j) == 1; },
     [](int i, int j) { return Word{T(i), T(j)}; },
     [](int i, int j) { return Word{T(j), T(i), T(j), T(i)}; }},
    {"d_i t_j = t_{j-1} d_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{D(i), T(j)}; }, [](int i, int j) { return Word{T(j - 1), D(i)}; }},
    {"d_i t_j = d_{i+1} (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{D(i), T(j)}; }, [](int i, int) { return Word{D(i + 1)}; }},
    {"d_i t_j = d_{i-1} (i = j+1)", 2, [](int i, int j) { return i == j + 1; },
     [](int i, int j) { return Word{D(i), T(j)}; }, [](int i, int) { return Word{D(i - 1)}; }},
    {"d_i t_j = t_j d_i (i >= j+2)", 2, [](int i, int j) { return i >= j + 2; },
     [](int i, int j) { return Word{D(i), T(j)}; }, [](int i, int j) { return Word{T(j), D(i)}; }},
    {"t_i d_j = d_j t_i (i <= j-2)", 2, [](int i, int j) { return i <= j - 2; },
     [](int i, int j) { return Word{T(i), D(j)}; }, [](int i, int j) { return Word{D(j), T(i)}; }},
    {"t_i d_j = d_j t_{i+1} t_i t_{i+1} (i = j-1)", 2, [](int i, int j) { return i == j - 1; },
     [](int i, int j) { return Word{T(i), D(j)}; },
     [](int i, int j) { return Word{D(j), T(i + 1), T(i), T(i + 1)}; }},
    {"t_i d_j = d_j t_{i+1} (i >= j)", 2, [](int i, int j) { return i >= j; },
     [](int i, int j) { return Word{T(i), D(j)}; }, [](int i, int j) { return Word{D(j), T(i + 1)}; }},
};

const Row kGrandisTS[] = {
    {"t_i s_j = s_j t_i (i <= j-2)", 2, [](int i, int j) { return i <= j - 2; },
     [](int i, int j) { return Word{T(i), S(j)}; }, [](int i, int j) { return Word{S(j), T(i)}; }},
    {"t_i s_j = t_{i+1} s_{j-1} t_i (i = j-1)", 2, [](int i, int j) { return i == j - 1; },
     [](int i, int j) { return Word{T(i), S(j)}; },
     [](int i, int j) { return Word{T(i + 1), S(j - 1), T(i)}; }},
    {"t_i s_j = s_j (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{T(i), S(j)}; }, [](int, int j) { return Word{S(j)}; }},
    {"t_i s_j = t_{i-1} s_{j+1} t_{i-1} (i = j+1)", 2, [](int i, int j) { return i == j + 1; },
     [](int i, int j) { return Word{T(i), S(j)}; },
     [](int i, int j) { return Word{T(i - 1), S(j + 1), T(i - 1)}; }},
    {"t_i s_j = s_j t_{i-1} (i >= j+2)", 2, [](int i, int j) { return i >= j + 2; },
     [](int i, int j) { return Word{T(i), S(j)}; }, [](int i, int j) { return Word{S(j), T(i - 1)}; }},
    {"s_i t_j = t_{j+1} s_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{S(i), T(j)}; }, [](int i, int j) { return Word{T(j + 1), S(i)}; }},
    {"s_i t_j = t_{j+1} t_j s_{i+1} (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{S(i), T(j)}; },
     [](int i, int j) { return Word{T(j + 1), T(j), S(i + 1)}; }},
    {"s_i t_j = t_j t_{j+1} s_{i-1} (i = j+1)", 2, [](int i, int j) { return i == j + 1; },
     [](int i, int j) { return Word{S(i), T(j)}; },
     [](int i, int j) { return Word{T(j), T(j + 1), S(i - 1)}; }},
    {"s_i t_j = t_j s_i (i >= j+2)", 2, [](int i, int j) { return i >= j + 2; },
     [](int i, int j) { return Word{S(i), T(j)}; }, [](int i, int j) { return Word{T(j), S(i)}; }},
};

const Row kQuasiDU[] = {
    {"d_i u_j = z_{j-1} (i = 0)", 2, [](int i, int j) { return i == 0 && j >= 1; },
     [](int, int j) { return Word{D(0), U(j)}; }, [](int, int j) { return Word{Z(j - 1)}; }},
    {"d_i u_j = u_{j-1} d_i (0 != i < j)", 2, [](int i, int j) { return i >= 1 && i < j; },
     [](int i, int j) { return Word{D(i), U(j)}; }, [](int i, int j) { return Word{U(j - 1), D(i)}; }},
    {"d_i u_j = id (i = j)", 2, [](int i, int j) { return i == j && i >= 1; },
     [](int i, int j) { return Word{D(i), U(j)}; }, [](int, int) { return Word{}; }},
    {"d_i u_j = u_j d_{i-1} (i > j)", 2, [](int i, int j) { return j >= 1 && i > j; },
     [](int i, int j) { return Word{D(i), U(j)}; }, [](int i, int j) { return Word{U(j), D(i - 1)}; }},
    {"u_i d_j = d_{j+1} u_i (i <= j)", 2, [](int i, int j) { return i >= 1 && i <= j; },
     [](int i, int j) { return Word{U(i), D(j)}; }, [](int i, int j) { return Word{D(j + 1), U(i)}; }},
    {"u_i d_j = d_j u_{i+1} (i >= j != 0)", 2, [](int i, int j) { return j >= 1 && i >= j; },
     [](int i, int j) { return Word{U(i), D(j)}; }, [](int i, int j) { return Word{D(j), U(i + 1)}; }},
    {"u_i d_j = d_1 u_{i+1} t_0 (j = 0)", 2, [](int i, int j) { return i >= 1 && j == 0; },
     [](int i, int) { return Word{U(i), D(0)}; }, [](int i, int) { return Word{D(1), U(i + 1), T(0)}; }},
};

const Row kUURows[] = {
    {"u_i u_j = u_{j+1} u_i (i <= j)", 2, [](int i, int j) { return i >= 1 && i <= j; },
     [](int i, int j) { return Word{U(i), U(j)}; }, [](int i, int j) { return Word{U(j + 1), U(i)}; }},
    {"u_i u_j = u_j u_{i-1} (i > j)", 2, [](int i, int j) { return j >= 1 && i > j; },
     [](int i, int j) { return Word{U(i), U(j)}; }, [](int i, int j) { return Word{U(j), U(i - 1)}; }},
};

const Row kQuasiTU[] = {
    {"t_i u_j = u_j t_i (0 != i <= j-2)", 2, [](int i, int j) { return i >= 1 && i <= j - 2; },
     [](int i, int j) { return Word{T(i), U(j)}; }, [](int i, int j) { return Word{U(j), T(i)}; }},
    {"t_i u_j = u_{j-1} (0 != i = j-1)", 2, [](int i, int j) { return i >= 1 && i == j - 1; },
     [](int i, int j) { return Word{T(i), U(j)}; }, [](int, int j) { return Word{U(j - 1)}; }},
    {"t_i u_j = u_{j+1} (i = j)", 2, [](int i, int j) { return i == j && j >= 1; },
     [](int i, int j) { return Word{T(i), U(j)}; }, [](int, int j) { return Word{U(j + 1)}; }},
    {"t_i u_j = u_j t_{i-1} (i > j)", 2, [](int i, int j) { return j >= 1 && i > j; },
     [](int i, int j) { return Word{T(i), U(j)}; }, [](int i, int j) { return Word{U(j), T(i - 1)}; }},
    {"u_i t_j = t_{j+1} u_i (i <= j)", 2, [](int i, int j) { return i >= 1 && i <= j; },
     [](int i, int j) { return Word{U(i), T(j)}; }, [](int i, int j) { return Word{T(j + 1), U(i)}; }},
    {"u_i t_j = t_j t_{j+1} u_{i-1} (i = j+1, j != 0)", 2, [](int i, int j) { return j >= 1 && i == j + 1; },
     [](int i, int j) { return Word{U(i), T(j)}; },
     [](int i, int j) { return Word{T(j), T(j + 1), U(i - 1)}; }},
    {"u_i t_j = t_j u_i (i >= j+2, j != 0)", 2, [](int i, int j) { return j >= 1 && i >= j + 2; },
     [](int i, int j) { return Word{U(i), T(j)}; }, [](int i, int j) { return Word{T(j), U(i)}; }},
    {"t_0 u_1 = u_1", 0, always, [](int, int) { return Word{T(0), U(1)}; },
     [](int, int) { return Word{U(1)}; }},
    {"t_0 u_i t_0 u_j = u_{j+1} t_0 u_i t_0 (2 <= i <= j)", 2,
     [](int i, int j) { return 2 <= i && i <= j; },
     [](int i, int j) { return Word{T(0), U(i), T(0), U(j)}; },
     [](int i, int j) { return Word{U(j + 1), T(0), U(i), T(0)}; }},
    {"t_0 u_i t_0 u_j = u_j t_0 u_{i-1} t_0 (2 <= j < i)", 2,
     [](int i, int j) { return 2 <= j && j < i; },
     [](int i, int j) { return Word{T(0), U(i), T(0), U(j)}; },
     [](int i, int j) { return Word{U(j), T(0), U(i - 1), T(0)}; }},
};

const Row kConjRows[] = {
    {"zinv_i z_j = z_j t_0 zinv_{i+1} (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{ZI(i), Z(j)}; },
     [](int i, int j) { return Word{Z(j), T(0), ZI(i + 1)}; }},
    {"zinv_i z_j = id (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{ZI(i), Z(j)}; }, [](int, int) { return Word{}; }},
    {"zinv_i z_j = z_{j+1} t_0 zinv_i (i > j)", 2, [](int i, int j) { return i > j; },
     [](int i, int j) { return Word{ZI(i), Z(j)}; },
     [](int i, int j) { return Word{Z(j + 1), T(0), ZI(i)}; }},
    {"z_i z_j = z_j z_{i+1} t_0 (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{Z(i), Z(j)}; },
     [](int i, int j) { return Word{Z(j), Z(i + 1), T(0)}; }},
    {"zinv_j z_i z_j = z_{i+1} t_0 (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{ZI(j), Z(i), Z(j)}; },
     [](int i, int) { return Word{Z(i + 1), T(0)}; }},
};

const Row kDzRows[] = {
    {"t_i z_j = z_j t_{i+1} (i <= j-2)", 2, [](int i, int j) { return i <= j - 2; },
     [](int i, int j) { return Word{T(i), Z(j)}; }, [](int i, int j) { return Word{Z(j), T(i + 1)}; }},
    {"t_i z_j = z_{j-1} (i = j-1)", 2, [](int i, int j) { return i == j - 1; },
     [](int i, int j) { return Word{T(i), Z(j)}; }, [](int, int j) { return Word{Z(j - 1)}; }},
    {"t_i z_j = z_{j+1} (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{T(i), Z(j)}; }, [](int, int j) { return Word{Z(j + 1)}; }},
    {"t_i z_j = z_j t_i (i >= j+1)", 2, [](int i, int j) { return i >= j + 1; },
     [](int i, int j) { return Word{T(i), Z(j)}; }, [](int i, int j) { return Word{Z(j), T(i)}; }},
    {"zinv_i t_j = t_j zinv_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{ZI(i), T(j)}; }, [](int i, int j) { return Word{T(j), ZI(i)}; }},
    {"zinv_i t_j = zinv_{i+1} (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{ZI(i), T(j)}; }, [](int i, int) { return Word{ZI(i + 1)}; }},
    {"zinv_i t_j = zinv_{i-1} (i = j+1)", 2, [](int i, int j) { return i == j + 1; },
     [](int i, int j) { return Word{ZI(i), T(j)}; }, [](int i, int) { return Word{ZI(i - 1)}; }},
    {"zinv_i t_j = t_{j+1} zinv_i (i >= j+2)", 2, [](int i, int j) { return i >= j + 2; },
     [](int i, int j) { return Word{ZI(i), T(j)}; }, [](int i, int j) { return Word{T(j + 1), ZI(i)}; }},
    {"d_i z_j = z_{j-1} d_{i+1} (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{D(i), Z(j)}; }, [](int i, int j) { return Word{Z(j - 1), D(i + 1)}; }},
    {"d_i z_j = d_0 (i = j)", 2, [](int i, int j) { return i == j; },
     [](int i, int j) { return Word{D(i), Z(j)}; }, [](int, int) { return Word{D(0)}; }},
    {"d_i z_j = z_j d_i (i > j)", 2, [](int i, int j) { return i > j; },
     [](int i, int j) { return Word{D(i), Z(j)}; }, [](int i, int j) { return Word{Z(j), D(i)}; }},
    {"zinv_i d_j = d_j zinv_i (i < j)", 2, [](int i, int j) { return i < j; },
     [](int i, int j) { return Word{ZI(i), D(j)}; }, [](int i, int j) { return Word{D(j), ZI(i)}; }},
    {"zinv_i d_j = d_{j+1} zinv_{i+1} (i >= j)", 2, [](int i, int j) { return i >= j; },
     [](int i, int j) { return Word{ZI(i), D(j)}; },
     [](int i, int j) { return Word{D(j + 1), ZI(i + 1)}; }},
};

// The z-u interchange degenerates at j = 0 (z_0 is the identity, and t_0
// cannot cross u_i for i >= 2), so the i > j rows require j >= 1.
const Row kZuRows[] = {
    {"zinv_j u_i = t_0 u_{i+1} t_0 zinv_{j-1} (i < j)", 2, [](int i, int j) { return i >= 1 && i < j; },
     [](int i, int j) { return Word{ZI(j), U(i)}; },
     [](int i, int j) { return Word{T(0), U(i + 1), T(0), ZI(j - 1)}; }},
    {"zinv_j u_i = u_1 (i = j)", 2, [](int i, int j) { return i >= 1 && i == j; },
     [](int i, int j) { return Word{ZI(j), U(i)}; }, [](int, int) { return Word{U(1)}; }},
    {"zinv_j u_i = t_0 u_i t_0 zinv_j (i > j >= 1)", 2, [](int i, int j) { return j >= 1 && i > j; },
     [](int i, int j) { return Word{ZI(j), U(i)}; },
     [](int i, int j) { return Word{T(0), U(i), T(0), ZI(j)}; }},
    {"u_i z_j = z_{j+1} t_0 u_{i+1} t_0 (i <= j)", 2, [](int i, int j) { return i >= 1 && i <= j; },
     [](int i, int j) { return Word{U(i), Z(j)}; },
     [](int i, int j) { return Word{Z(j + 1), T(0), U(i + 1), T(0)}; }},
    {"u_i z_j = z_j t_0 u_i t_0 (i > j >= 1)", 2, [](int i, int j) { return j >= 1 && i > j; },
     [](int i, int j) { return Word{U(i), Z(j)}; },
     [](int i, int j) { return Word{Z(j), T(0), U(i), T(0)}; }},
};

const Row kReplacementRows[] = {
    {"u_i d_i = r_i", 1, [](int i, int) { return i >= 1; },
     [](int i, int) { return Word{U(i), D(i)}; }, [](int i, int) { return Word{Gen(GenKind::r, i)}; }},
    {"d_{i+1} u_i = r_i", 1, [](int i, int) { return i >= 1; },
     [](int i, int) { return Word{D(i + 1), U(i)}; }, [](int i, int) { return Word{Gen(GenKind::r, i)}; }},
    {"d_i u_{i+1} = r_i", 1, [](int i, int) { return i >= 1; },
     [](int i, int) { return Word{D(i), U(i + 1)}; }, [](int i, int) { return Word{Gen(GenKind::r, i)}; }},
    {"r_i r_i = r_i", 1, [](int i, int) { return i >= 1; },
     [](int i, int) { return Word{Gen(GenKind::r, i), Gen(GenKind::r, i)}; },
     [](int i, int) { return Word{Gen(GenKind::r, i)}; }},
    {"r_i r_j = r_j r_i", 2, [](int i, int j) { return i >= 1 && j >= 1 && i != j; },
     [](int i, int j) { return Word{Gen(GenKind::r, i), Gen(GenKind::r, j)}; },
     [](int i, int j) { return Word{Gen(GenKind::r, j), Gen(GenKind::r, i)}; }},
};

std::vector<Row> collect(std::initializer_list<std::pair<const Row*, std::size_t>> groups) {
  std::vector<Row> rows;
  for (auto [ptr, count] : groups) rows.insert(rows.end(), ptr, ptr + count);
  return rows;
}

template <std::size_t N>
std::pair<const Row*, std::size_t> group(const Row (&rows)[N]) {
  return {rows, N};
}

const std::vector<Row>& rows_for(std::string_view family) {
  static const std::vector<Row> cosimplicial = collect({group(kCosimplicialRows)});
  static const std::vector<Row> simplicial = collect({group(kSimplicialDS)});
  static const std::vector<Row> grandis =
      collect({group(kSimplicialDS), group(kTransRows), group(kGrandisTS)});
  static const std::vector<Row> quasi = collect({{kSimplicialDS, 2},  // the d_i d_j rows only
                                                 group(kQuasiDU),
                                                 group(kUURows),
                                                 group(kTransRows),
                                                 group(kQuasiTU)});
  static const std::vector<Row> moore = collect({group(kMooreRows)});
  static const std::vector<Row> conjinsym = collect({group(kConjRows)});
  static const std::vector<Row> dzzds = collect({group(kDzRows)});
  static const std::vector<Row> zuuzs = collect({group(kZuRows)});
  static const std::vector<Row> uus = collect({group(kUURows)});
  static const std::vector<Row> replacement = collect({group(kReplacementRows)});
  static const std::vector<Row> none;

  if (family == "cosimplicial") return cosimplicial;
  if (family == "simplicial") return simplicial;
  if (family == "grandis") return grandis;
  if (family == "quasi") return quasi;
  if (family == "moore") return moore;
  if (family == "conjinsym") return conjinsym;
  if (family == "dzzds") return dzzds;
  if (family == "zuuzs") return zuuzs;
  if (family == "uus") return uus;
  if (family == "replacement") return replacement;
  return none;
}

bool typechecks(const Word& word, int anchor) {
  try {
    typecheck(word, anchor);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::string instance_label(const Row& row, int i, int j) {
  std::string label = row.label;
  if (row.arity >= 1) {
    label += " [i=" + std::to_string(i);
    if (row.arity >= 2) label += ", j=" + std::to_string(j);
    label += "]";
  }
  return label;
}

void instantiate_rows(const std::vector<Row>& rows, std::string_view family, int max_dim,
                      std::vector<RuleInstance>& out) {
  // Stage dimensions inside these short words exceed the anchor by at most 3,
  // so no valid index can exceed max_dim + 3.
  const int index_limit = max_dim + 3;
  for (const Row& row : rows) {
    const int imax = row.arity >= 1 ? index_limit : 0;
    const int jmax = row.arity >= 2 ? index_limit : 0;
    for (int i = 0; i <= imax; ++i) {
      for (int j = 0; j <= jmax; ++j) {
        if (!row.cond(i, j)) continue;
        Word lhs = row.lhs(i, j);
        Word rhs = row.rhs(i, j);
        for (int n = 0; n <= max_dim; ++n) {
          if (!typechecks(lhs, n) || !typechecks(rhs, n)) continue;
          out.push_back({lhs, rhs, n, std::string(family), instance_label(row, i, j)});
        }
      }
    }
  }
}

void instantiate_push_through(int max_dim, std::vector<RuleInstance>& out) {
  for (int n = 1; n <= max_dim; ++n) {
    for (int i = 1; i <= n - 1; ++i) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> picked;
        for (int b = 0; b < n; ++b) {
          if (mask & (1u << b)) picked.push_back(b + 1);
        }
        MultiIndex gamma(std::move(picked));
        auto [gamma2, tau] = push_t_through_u(i, gamma);

        Word lhs{T(i)};
        Word ublock = canonical_spelling(MultiIndex{}, gamma);
        lhs.insert(lhs.end(), ublock.begin(), ublock.end());

        Word rhs = canonical_spelling(MultiIndex{}, gamma2);
        if (tau) rhs.push_back(*tau);

        if (!typechecks(lhs, n) || !typechecks(rhs, n)) continue;
        out.push_back({std::move(lhs), std::move(rhs), n, "push_through",
                       "t_i u_g = u_{t_i(g)} t_{i~g} [i=" + std::to_string(i) +
                           ", g=" + to_string(gamma) + "]"});
      }
    }
  }
}

}  // namespace

const std::vector<RuleFamily>& families() {
  static const std::vector<RuleFamily> all = {
      {"cosimplicial", "coface/codegeneracy laws of the monotonic category (d/s, classical composition)"},
      {"simplicial", "the same d/s laws in pipeline form"},
      {"grandis", "pipeline presentation over d, s and the transpositions t"},
      {"quasi", "pipeline presentation over d, t and the quasi-codegeneracies u"},
      {"moore", "adjacent-transposition presentation of the symmetric groups"},
      {"conjinsym", "conjugation laws among the cyclic permutations z, their inverses and t_0"},
      {"dzzds", "interchange of t and d with z and its inverse"},
      {"zuuzs", "interchange of u with z and its inverse via t_0"},
      {"uus", "u-u interchange (derivable from the t/u rules)"},
      {"replacement", "replacement operators r_i: spellings and commuting-idempotent laws"},
      {"push_through", "a transposition crossing a multi-index u-block"},
  };
  return all;
}

bool is_family(std::string_view name) {
  for (const RuleFamily& f : families()) {
    if (f.name == name) return true;
  }
  return false;
}

std::vector<RuleInstance> instantiate(std::string_view family, int max_dim) {
  if (!is_family(family)) {
    throw DomainError(Errc::UnknownFamily, "no rule family named '" + std::string(family) + "'");
  }
  if (max_dim < 1) {
    throw DomainError(Errc::NegativeDim, "max_dim must be >= 1");
  }
  std::vector<RuleInstance> out;
  if (family == "push_through") {
    instantiate_push_through(max_dim, out);
  } else {
    instantiate_rows(rows_for(family), family, max_dim, out);
  }
  return out;
}

namespace {

void require_qord_alphabet(const Word& word) {
  for (const Gen& g : word) {
    if (g.kind == GenKind::u) continue;
    if (g.kind == GenKind::d && g.index >= 1) continue;
    throw DomainError(Errc::ForbiddenSymbol,
                      render(Word{g}) + " is outside the rewrite alphabet (d_i with i >= 1, u_j)");
  }
}

}  // namespace

std::optional<Word> rewrite_step(const Word& word) {
  require_qord_alphabet(word);
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const Gen& a = word[p];
    const Gen& b = word[p + 1];
    Word repl;
    bool redex = false;
    if (a.kind == GenKind::d && b.kind == GenKind::u) {
      redex = true;
      if (a.index < b.index) {
        repl = {U(b.index - 1), D(a.index)};
      } else if (a.index > b.index) {
        repl = {U(b.index), D(a.index - 1)};
      }  // i = j: the pair cancels
    } else if (a.kind == GenKind::u && b.kind == GenKind::u && a.index <= b.index) {
      redex = true;
      repl = {U(b.index + 1), U(a.index)};
    } else if (a.kind == GenKind::d && b.kind == GenKind::d && a.index >= b.index) {
      redex = true;
      repl = {D(b.index), D(a.index + 1)};
    }
    if (!redex) continue;

    Word out;
    out.reserve(word.size());
    out.insert(out.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
    out.insert(out.end(), repl.begin(), repl.end());
    out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(p) + 2, word.end());
    return out;
  }
  return std::nullopt;
}

std::uint64_t normalize_step_bound(const Word& word) {
  const std::uint64_t len = word.size();
  std::uint64_t maxidx = 0;
  for (const Gen& g : word) maxidx = std::max(maxidx, static_cast<std::uint64_t>(g.index));
  return len * len + 3 * len * (maxidx + 2 * len + 2) + 1;
}

NormalizeStats normalize_qord_traced(Word word) {
  NormalizeStats stats;
  stats.bound = normalize_step_bound(word);
  while (auto next = rewrite_step(word)) {
    word = std::move(*next);
    if (++stats.steps > stats.bound) {
      throw std::logic_error("rewrite exceeded its declared step bound on " + render(word));
    }
  }
  stats.normal_form = std::move(word);
  return stats;
}

Word normalize_qord(const Word& word) {
  return normalize_qord_traced(word).normal_form;
}

}  // namespace finsym
