#include "finsym/word.hpp"

#include <cctype>

namespace finsym {

Gen::Gen(GenKind kind_, int index_) : kind(kind_), index(index_) {
  if (index < 0) {
    throw DomainError(Errc::IndexOutOfRange, "generator index must be >= 0");
  }
  if ((kind == GenKind::u || kind == GenKind::r) && index < 1) {
    throw DomainError(Errc::IndexOutOfRange,
                      std::string(kind_letter(kind)) + "0 is not defined");
  }
}

namespace {

GenKind letter_kind(char c) {
  switch (c) {
    case 'd': return GenKind::d;
    case 's': return GenKind::s;
    case 't': return GenKind::t;
    case 'u': return GenKind::u;
    case 'z': return GenKind::z;
    case 'r': return GenKind::r;
    default: throw ParseError(Errc::BadToken, std::string("unknown generator letter '") + c + "'");
  }
}

Gen parse_token(std::string_view tok) {
  GenKind kind = letter_kind(tok[0]);
  std::size_t p = 1;
  int index = 0;
  bool have_digit = false;
  while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) {
    index = index * 10 + (tok[p] - '0');
    have_digit = true;
    ++p;
  }
  if (!have_digit) {
    throw ParseError(Errc::BadToken, "missing index in token '" + std::string(tok) + "'");
  }
  if (p < tok.size() && tok[p] == '\'') {
    if (kind != GenKind::z) {
      throw ParseError(Errc::InvalidInverse,
                       "inverse marker is only allowed on z, got '" + std::string(tok) + "'");
    }
    kind = GenKind::zinv;
    ++p;
  }
  if (p != tok.size()) {
    throw ParseError(Errc::BadToken, "trailing characters in token '" + std::string(tok) + "'");
  }
  return Gen(kind, index);
}

}  // namespace

Word parse(std::string_view text) {
  Word word;
  std::size_t p = 0;
  while (p < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[p]))) {
      ++p;
      continue;
    }
    std::size_t q = p;
    while (q < text.size() && !std::isspace(static_cast<unsigned char>(text[q]))) ++q;
    word.push_back(parse_token(text.substr(p, q - p)));
    p = q;
  }
  return word;
}

std::string render(const Word& word) {
  std::string out;
  for (const Gen& g : word) {
    if (!out.empty()) out += ' ';
    if (g.kind == GenKind::zinv) {
      out += 'z';
      out += std::to_string(g.index);
      out += '\'';
    } else {
      out += kind_letter(g.kind);
      out += std::to_string(g.index);
    }
  }
  return out;
}

int dim_delta(GenKind kind) {
  switch (kind) {
    case GenKind::d: return 1;
    case GenKind::s:
    case GenKind::u: return -1;
    default: return 0;
  }
}

namespace {

// Valid index range of a generator acting at stage dimension s, i.e. the
// range of the generator() constructor with the matching superscript.
bool index_valid_at(GenKind kind, int i, int s) {
  switch (kind) {
    case GenKind::d: return i >= 0 && i <= s + 1;
    case GenKind::s: return s >= 1 && i >= 0 && i <= s - 1;
    case GenKind::u: return s >= 1 && i >= 1 && i <= s;
    case GenKind::t: return s >= 1 && i >= 0 && i <= s - 1;
    case GenKind::z:
    case GenKind::zinv: return i >= 0 && i <= s;
    case GenKind::r: return s >= 1 && i >= 1 && i <= s;
  }
  return false;
}

// The concrete map of a symbol acting at stage dimension s.
FinMap stage_map(const Gen& g, int s) {
  return generator(g.kind, s + dim_delta(g.kind), g.index);
}

}  // namespace

DimChain typecheck(const Word& word, int at_dim) {
  if (at_dim < 0) {
    throw DomainError(Errc::NegativeDim, "anchor dimension must be >= 0");
  }
  DimChain dims;
  dims.reserve(word.size() + 1);
  dims.push_back(at_dim);
  int s = at_dim;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const Gen& g = word[pos];
    int next = s + dim_delta(g.kind);
    if (next < 0) {
      throw DomainError(Errc::NegativeDim, "dimension drops below 0 at position " + std::to_string(pos) +
                                               " (" + render(Word{g}) + " at stage dimension " +
                                               std::to_string(s) + ")");
    }
    if (!index_valid_at(g.kind, g.index, s)) {
      throw DomainError(Errc::StageIndexError, "position " + std::to_string(pos) + ": " + render(Word{g}) +
                                                   " is invalid at stage dimension " + std::to_string(s));
    }
    s = next;
    dims.push_back(s);
  }
  return dims;
}

FinMap eval(const Word& word, int at_dim) {
  DimChain dims = typecheck(word, at_dim);
  FinMap acc = identity(at_dim);
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    acc = compose(stage_map(word[pos], dims[pos]), acc);
  }
  return acc;
}

Word canonical_spelling(const MultiIndex& alpha, const MultiIndex& beta) {
  Word word;
  word.reserve(alpha.size() + beta.size());
  for (auto it = beta.indices().rbegin(); it != beta.indices().rend(); ++it) {
    word.emplace_back(GenKind::u, *it);
  }
  for (int i : alpha) {
    word.emplace_back(GenKind::d, i);
  }
  return word;
}

Word expand_z(const Word& word) {
  Word out;
  out.reserve(word.size());
  for (const Gen& g : word) {
    if (g.kind == GenKind::z) {
      for (int k = g.index - 1; k >= 0; --k) out.emplace_back(GenKind::t, k);
    } else if (g.kind == GenKind::zinv) {
      for (int k = 0; k <= g.index - 1; ++k) out.emplace_back(GenKind::t, k);
    } else {
      out.push_back(g);
    }
  }
  return out;
}

Word translate(const Word& word, Target target) {
  Word staged;
  staged.reserve(word.size());
  for (const Gen& g : word) {
    if (g.kind == GenKind::r) {
      staged.emplace_back(GenKind::u, g.index);
      staged.emplace_back(GenKind::d, g.index);
    } else {
      staged.push_back(g);
    }
  }

  Word out;
  out.reserve(staged.size());
  for (const Gen& g : staged) {
    if (target == Target::du && g.kind == GenKind::s) {
      out.emplace_back(GenKind::z, g.index);
      out.emplace_back(GenKind::u, g.index + 1);
      out.emplace_back(GenKind::zinv, g.index);
    } else if (target == Target::ds && g.kind == GenKind::u) {
      out.emplace_back(GenKind::zinv, g.index - 1);
      out.emplace_back(GenKind::s, g.index - 1);
      out.emplace_back(GenKind::z, g.index - 1);
    } else {
      out.push_back(g);
    }
  }
  return expand_z(out);
}

}  // namespace finsym
