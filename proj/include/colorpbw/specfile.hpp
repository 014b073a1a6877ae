#pragma once

// The algebra-definition and element file formats.
//
// Algebra files are line-based, '#' starts a comment:
//
//   grading 2                  moduli of Gamma = Z_m1 x ... x Z_mk
//   pairing 1                  k*k integers row-major; eps(a,b) = zeta_N^{a^T P b}
//   epsilon 1 | 1 = -1         alternative: explicit table, one line per pair
//   basis x 1                  name followed by k residues
//   bracket x y = z 1          [x,y] = 1*z (+ further name/scalar pairs)
//   alpha id                   or one "alpha x = y 1 ..." line per column
//   flags involutive multiplicative
//
// Scalars are exact: rationals ("3/4") or zeta-polynomials ("z^2-1/2").
// Element files hold one term per line: "term <scalar> <name> <name> ...".
// Printing is canonical, so parse(print(spec)) == spec.

#include "algebra.hpp"
#include "tensor.hpp"
#include "uea.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace colorpbw {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct AlgebraSpec {
  std::vector<int> moduli{1};
  std::optional<std::vector<std::vector<long>>> pairing;
  // explicit table entries (a, b, value), in file order
  std::vector<std::tuple<Degree, Degree, Scalar>> epsilon_entries;
  std::vector<std::string> names;
  std::vector<Degree> degrees;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> brackets;
  bool alpha_identity = true;
  Matrix alpha;
  bool involutive = false;
  bool multiplicative = false;

  GradingGroup group() const { return GradingGroup(moduli); }

  ColorHomLieAlgebra to_algebra() const {
    GradingGroup g = group();
    ColorHomLieAlgebra A;
    A.basis.names = names;
    A.basis.degrees = degrees;
    if (pairing) {
      A.epsilon = CommutationFactor::from_pairing(g, *pairing);
    } else if (!epsilon_entries.empty()) {
      std::size_t s = g.size();
      std::vector<Scalar> table(s * s, Scalar(0));
      std::vector<bool> seen(s * s, false);
      for (const auto& [a, b, v] : epsilon_entries) {
        std::size_t idx = g.index(a) * s + g.index(b);
        table[idx] = v;
        seen[idx] = true;
      }
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
          throw std::invalid_argument("epsilon table is incomplete at pair " +
                                      degree_str(g.element(i / s)) + "," +
                                      degree_str(g.element(i % s)));
      A.epsilon = CommutationFactor::from_table(g, std::move(table));
    } else {
      A.epsilon = CommutationFactor::trivial(g);
    }
    for (const auto& [key, v] : brackets) A.bracket.set(key.first, key.second, v);
    A.alpha = alpha_identity ? Matrix::identity(names.size()) : alpha;
    A.involutive_flag = involutive;
    A.multiplicative_flag = multiplicative;
    A.validate_structure(g);
    return A;
  }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.moduli == b.moduli && a.pairing == b.pairing &&
           a.epsilon_entries == b.epsilon_entries && a.names == b.names &&
           a.degrees == b.degrees && a.brackets == b.brackets &&
           a.alpha_identity == b.alpha_identity &&
           (a.alpha_identity || a.alpha == b.alpha) && a.involutive == b.involutive &&
           a.multiplicative == b.multiplicative;
  }
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

inline long parse_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

inline Degree parse_degree(const std::vector<std::string>& toks, std::size_t from, std::size_t to,
                           const GradingGroup& g, int line) {
  if (to - from != g.rank())
    throw ParseError(line, "expected " + std::to_string(g.rank()) + " residues");
  Degree d;
  for (std::size_t i = from; i < to; ++i) d.push_back(static_cast<int>(parse_int(toks[i], line)));
  d = g.reduce(d);
  return d;
}

}  // namespace detail

inline AlgebraSpec parse_algebra_spec(const std::string& text) {
  AlgebraSpec spec;
  std::optional<GradingGroup> group;
  FieldPtr field;
  bool saw_grading = false;
  bool alpha_seen = false;
  std::map<std::size_t, SparseVec> alpha_cols;

  auto need_group = [&](int line) -> const GradingGroup& {
    if (!group) throw ParseError(line, "a 'grading' line must come first");
    return *group;
  };
  auto resolve = [&](const std::string& name, int line) -> std::size_t {
    for (std::size_t i = 0; i < spec.names.size(); ++i)
      if (spec.names[i] == name) return i;
    throw ParseError(line, "unknown basis name '" + name + "'");
  };
  auto parse_scalar_at = [&](const std::string& s, int line) -> Scalar {
    try {
      return parse_scalar(s, field);
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
  };
  // trailing "name scalar" pairs starting at token index `from`
  auto parse_combination = [&](const std::vector<std::string>& toks, std::size_t from,
                               int line) -> SparseVec {
    if ((toks.size() - from) % 2 != 0 || toks.size() == from)
      throw ParseError(line, "expected name/scalar pairs");
    SparseVec v;
    for (std::size_t k = from; k < toks.size(); k += 2) {
      std::size_t idx = resolve(toks[k], line);
      Scalar c = parse_scalar_at(toks[k + 1], line);
      sparsevec_add(v, {{idx, Scalar(1)}}, c);
    }
    return v;
  };

  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "grading") {
      if (saw_grading) throw ParseError(line, "duplicate 'grading' line");
      saw_grading = true;
      if (toks.size() < 2) throw ParseError(line, "grading needs at least one modulus");
      spec.moduli.clear();
      for (std::size_t i = 1; i < toks.size(); ++i) {
        long m = detail::parse_int(toks[i], line);
        if (m < 1) throw ParseError(line, "grading moduli must be >= 1");
        spec.moduli.push_back(static_cast<int>(m));
      }
      try {
        group = GradingGroup(spec.moduli);
      } catch (const std::exception& e) {
        throw ParseError(line, e.what());
      }
      field = group->field();
    } else if (kw == "pairing") {
      const GradingGroup& g = need_group(line);
      if (!spec.epsilon_entries.empty())
        throw ParseError(line, "'pairing' and 'epsilon' lines are mutually exclusive");
      std::size_t k = g.rank();
      if (toks.size() != 1 + k * k)
        throw ParseError(line, "pairing needs " + std::to_string(k * k) + " integers");
      std::vector<std::vector<long>> p(k, std::vector<long>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          p[i][j] = detail::parse_int(toks[1 + i * k + j], line);
      spec.pairing = std::move(p);
    } else if (kw == "epsilon") {
      const GradingGroup& g = need_group(line);
      if (spec.pairing)
        throw ParseError(line, "'pairing' and 'epsilon' lines are mutually exclusive");
      std::size_t k = g.rank();
      // epsilon a_1 .. a_k | b_1 .. b_k = scalar
      if (toks.size() != 2 * k + 4 || toks[1 + k] != "|" || toks[2 * k + 2] != "=")
        throw ParseError(line, "expected 'epsilon <a> | <b> = <scalar>'");
      Degree a = detail::parse_degree(toks, 1, 1 + k, g, line);
      Degree b = detail::parse_degree(toks, 2 + k, 2 + 2 * k, g, line);
      spec.epsilon_entries.emplace_back(a, b, parse_scalar_at(toks[2 * k + 3], line));
    } else if (kw == "basis") {
      const GradingGroup& g = need_group(line);
      if (toks.size() != 2 + g.rank())
        throw ParseError(line, "expected 'basis <name> <" + std::to_string(g.rank()) +
                                   " residues>'");
      for (const auto& nm : spec.names)
        if (nm == toks[1]) throw ParseError(line, "duplicate basis name '" + toks[1] + "'");
      spec.names.push_back(toks[1]);
      spec.degrees.push_back(detail::parse_degree(toks, 2, toks.size(), g, line));
    } else if (kw == "bracket") {
      need_group(line);
      if (toks.size() < 4 || toks[3] != "=")
        throw ParseError(line, "expected 'bracket <a> <b> = <name> <scalar> ...'");
      std::size_t i = resolve(toks[1], line), j = resolve(toks[2], line);
      if (spec.brackets.count({i, j}))
        throw ParseError(line, "duplicate bracket entry for (" + toks[1] + "," + toks[2] + ")");
      SparseVec v = parse_combination(toks, 4, line);
      if (!v.empty()) spec.brackets[{i, j}] = std::move(v);
    } else if (kw == "alpha") {
      need_group(line);
      if (toks.size() == 2 && toks[1] == "id") {
        if (alpha_seen) throw ParseError(line, "'alpha id' conflicts with earlier alpha lines");
        spec.alpha_identity = true;
      } else {
        if (toks.size() < 4 || toks[2] != "=")
          throw ParseError(line, "expected 'alpha <name> = <name> <scalar> ...' or 'alpha id'");
        alpha_seen = true;
        spec.alpha_identity = false;
        std::size_t j = resolve(toks[1], line);
        if (alpha_cols.count(j))
          throw ParseError(line, "duplicate alpha column for '" + toks[1] + "'");
        alpha_cols[j] = parse_combination(toks, 3, line);
      }
    } else if (kw == "flags") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "involutive")
          spec.involutive = true;
        else if (toks[i] == "multiplicative")
          spec.multiplicative = true;
        else
          throw ParseError(line, "unknown flag '" + toks[i] + "'");
      }
    } else {
      throw ParseError(line, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_grading) throw ParseError(line, "missing 'grading' line");
  if (spec.names.empty()) throw ParseError(line, "no basis elements");

  std::size_t n = spec.names.size();
  spec.alpha = Matrix::identity(n);
  if (!spec.alpha_identity)
    for (const auto& [j, col] : alpha_cols) {
      for (std::size_t i = 0; i < n; ++i) spec.alpha.at(i, j) = Scalar(0);
      for (const auto& [i, c] : col) spec.alpha.at(i, j) = c;
    }
  return spec;
}

inline std::string print_algebra_spec(const AlgebraSpec& spec) {
  std::ostringstream os;
  os << "grading";
  for (int m : spec.moduli) os << " " << m;
  os << "\n";
  if (spec.pairing) {
    os << "pairing";
    for (const auto& row : *spec.pairing)
      for (long v : row) os << " " << v;
    os << "\n";
  } else {
    for (const auto& [a, b, v] : spec.epsilon_entries) {
      os << "epsilon";
      for (int r : a) os << " " << r;
      os << " |";
      for (int r : b) os << " " << r;
      os << " = " << v.str() << "\n";
    }
  }
  for (std::size_t i = 0; i < spec.names.size(); ++i) {
    os << "basis " << spec.names[i];
    for (int r : spec.degrees[i]) os << " " << r;
    os << "\n";
  }
  for (const auto& [key, v] : spec.brackets) {
    os << "bracket " << spec.names[key.first] << " " << spec.names[key.second] << " =";
    for (const auto& [k, c] : v) os << " " << spec.names[k] << " " << c.str();
    os << "\n";
  }
  if (spec.alpha_identity) {
    os << "alpha id\n";
  } else {
    for (std::size_t j = 0; j < spec.names.size(); ++j) {
      os << "alpha " << spec.names[j] << " =";
      bool any = false;
      for (std::size_t i = 0; i < spec.names.size(); ++i)
        if (!spec.alpha.at(i, j).is_zero()) {
          os << " " << spec.names[i] << " " << spec.alpha.at(i, j).str();
          any = true;
        }
      if (!any) os << " " << spec.names[0] << " 0";  // explicit zero column
      os << "\n";
    }
  }
  if (spec.involutive || spec.multiplicative) {
    os << "flags";
    if (spec.involutive) os << " involutive";
    if (spec.multiplicative) os << " multiplicative";
    os << "\n";
  }
  return os.str();
}

// Element files: "term <scalar> <name> <name> ...", one pure tensor per line.
inline TensorElement parse_element_file(const std::string& text, const GradedBasis& basis,
                                        const FieldPtr& field) {
  TensorElement t;
  std::istringstream is(text);
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    auto toks = detail::tokenize(raw);
    if (toks.empty()) continue;
    if (toks[0] != "term") throw ParseError(line, "expected 'term <scalar> <name> ...'");
    if (toks.size() < 3) throw ParseError(line, "term needs a scalar and a nonempty word");
    Scalar c;
    try {
      c = parse_scalar(toks[1], field);
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
    std::vector<std::size_t> letters;
    for (std::size_t k = 2; k < toks.size(); ++k) {
      long idx = basis.index_of(toks[k]);
      if (idx < 0) throw ParseError(line, "unknown basis name '" + toks[k] + "'");
      letters.push_back(static_cast<std::size_t>(idx));
    }
    t.add(Word(std::move(letters)), c);
  }
  return t;
}

inline std::string print_element_file(const GradedBasis& basis, const TensorElement& t) {
  std::ostringstream os;
  for (const auto& [w, c] : t.terms) {
    os << "term " << c.str();
    for (std::size_t l : w.letters) os << " " << basis.names[l];
    os << "\n";
  }
  return os.str();
}

// Emits the Z_2 / pairing [[1]] specialisation: eps(x,y) = (-1)^{|x||y|}.
// Bracket and alpha lines use the same grammar as algebra files.
inline AlgebraSpec super_preset(const std::vector<std::string>& names,
                                const std::vector<int>& parities,
                                const std::vector<std::string>& bracket_lines,
                                const std::vector<std::string>& alpha_lines) {
  if (names.size() != parities.size())
    throw std::invalid_argument("super_preset: " + std::to_string(names.size()) + " names but " +
                                std::to_string(parities.size()) + " parities");
  for (int p : parities)
    if (p != 0 && p != 1)
      throw std::invalid_argument("super_preset: parities must be 0 or 1");
  std::ostringstream os;
  os << "grading 2\npairing 1\n";
  for (std::size_t i = 0; i < names.size(); ++i)
    os << "basis " << names[i] << " " << parities[i] << "\n";
  for (const auto& b : bracket_lines) os << "bracket " << b << "\n";
  if (alpha_lines.empty()) {
    os << "alpha id\nflags involutive multiplicative\n";
  } else {
    for (const auto& a : alpha_lines) os << "alpha " << a << "\n";
    os << "flags involutive\n";
  }
  return parse_algebra_spec(os.str());
}

}  // namespace colorpbw
