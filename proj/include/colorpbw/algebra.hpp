#pragma once

// Finite-dimensional color hom-Lie algebras given by structure constants:
// exhaustive axiom verifiers, the Yau twist, epsilon-antisymmetrization of
// hom-associative color algebras, and morphism checks.  Everything is exact;
// a verifier reports each violated axiom instance with its nonzero defect.

#include "grading.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "scalar.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorpbw {

struct GradedBasis {
  std::vector<std::string> names;
  std::vector<Degree> degrees;

  std::size_t dim() const { return names.size(); }

  long index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<long>(i);
    return -1;
  }

  void validate(const GradingGroup& g) const {
    if (names.size() != degrees.size())
      throw std::invalid_argument("basis names/degrees length mismatch");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!g.valid(degrees[i]))
        throw std::invalid_argument("basis element '" + names[i] + "' has an invalid degree");
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw std::invalid_argument("duplicate basis name '" + names[i] + "'");
    }
  }

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.names == b.names && a.degrees == b.degrees;
  }
};

// Sparse vector over basis indices, sorted, no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline void sparsevec_add(SparseVec& acc, const SparseVec& v, const Scalar& c) {
  SparseRow r = sparse_axpy(acc, c, v);
  acc = std::move(r);
}

// Sparse element of the algebra; canonical (no zero coefficients).
using AlgebraElement = SparseVec;

inline AlgebraElement unit_element(std::size_t i) { return {{i, Scalar(1)}}; }

// Structure constants: (i, j) -> [e_i, e_j] as a sparse vector.  Absent keys
// mean zero.
struct BracketTable {
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> constants;

  const SparseVec& at(std::size_t i, std::size_t j) const {
    static const SparseVec empty;
    auto it = constants.find({i, j});
    return it == constants.end() ? empty : it->second;
  }

  void set(std::size_t i, std::size_t j, SparseVec v) {
    if (v.empty())
      constants.erase({i, j});
    else
      constants[{i, j}] = std::move(v);
  }

  friend bool operator==(const BracketTable& a, const BracketTable& b) {
    return a.constants == b.constants;
  }
};

struct ColorHomLieAlgebra {
  GradedBasis basis;
  CommutationFactor epsilon;
  BracketTable bracket;
  Matrix alpha;
  bool involutive_flag = false;
  bool multiplicative_flag = false;

  std::size_t dim() const { return basis.dim(); }
  const Degree& degree(std::size_t i) const { return basis.degrees[i]; }
  const Scalar& eps(std::size_t i, std::size_t j) const {
    return epsilon.value(degree(i), degree(j));
  }

  SparseVec alpha_column(std::size_t j) const {
    SparseVec col;
    for (std::size_t i = 0; i < dim(); ++i)
      if (!alpha.at(i, j).is_zero()) col.emplace_back(i, alpha.at(i, j));
    return col;
  }

  void validate_structure(const GradingGroup& g) const {
    basis.validate(g);
    if (alpha.rows() != dim() || alpha.cols() != dim())
      throw std::invalid_argument("twist matrix shape does not match the basis");
    for (const auto& [key, v] : bracket.constants) {
      if (key.first >= dim() || key.second >= dim())
        throw std::invalid_argument("bracket entry indexes outside the basis");
      for (const auto& [k, c] : v) {
        if (k >= dim()) throw std::invalid_argument("bracket target outside the basis");
        if (c.is_zero()) throw std::invalid_argument("bracket table stores a zero coefficient");
      }
    }
  }
};

inline std::string format_element(const GradedBasis& basis, const AlgebraElement& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : x) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + basis.names[i];
  }
  return s;
}

// Bilinear extension of the structure-constant table.
inline AlgebraElement bracket_eval(const ColorHomLieAlgebra& A, const AlgebraElement& x,
                                   const AlgebraElement& y) {
  AlgebraElement r;
  for (const auto& [i, cx] : x) {
    if (i >= A.dim()) throw std::invalid_argument("element index outside the basis");
    for (const auto& [j, cy] : y) {
      if (j >= A.dim()) throw std::invalid_argument("element index outside the basis");
      sparsevec_add(r, A.bracket.at(i, j), cx * cy);
    }
  }
  return r;
}

inline AlgebraElement apply_matrix(const Matrix& m, const AlgebraElement& x) {
  AlgebraElement r;
  for (const auto& [j, c] : x) {
    SparseVec col;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero()) col.emplace_back(i, m.at(i, j));
    sparsevec_add(r, col, c);
  }
  return r;
}

// Exhaustive axiom check over basis tuples (bilinearity reduces the general
// case to these).  Multiplicativity and involutivity are checked when the
// algebra carries the corresponding flag.
inline VerificationReport verify_color_hom_lie(const ColorHomLieAlgebra& A) {
  VerificationReport report;
  const std::size_t n = A.dim();
  const GradingGroup& g = A.epsilon.group();
  auto name = [&](std::size_t i) { return A.basis.names[i]; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Degree sum = g.add(A.degree(i), A.degree(j));
      for (const auto& [k, c] : A.bracket.at(i, j))
        if (A.degree(k) != sum)
          report.add("grading", "[" + name(i) + "," + name(j) + "] -> " + name(k),
                     c.str() + "*" + name(k) + " of degree " + degree_str(A.degree(k)) +
                         " != " + degree_str(sum));
    }

  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!A.alpha.at(i, j).is_zero() && A.degree(i) != A.degree(j))
        report.add("alpha-even", "alpha(" + name(j) + ") -> " + name(i),
                   A.alpha.at(i, j).str());

  // [x,y] + eps(x,y)[y,x] = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement defect = A.bracket.at(i, j);
      sparsevec_add(defect, A.bracket.at(j, i), A.eps(i, j));
      if (!defect.empty())
        report.add("skew-symmetry", "(" + name(i) + "," + name(j) + ")",
                   format_element(A.basis, defect));
    }

  // eps(z,x)[alpha(x),[y,z]] + eps(x,y)[alpha(y),[z,x]] + eps(y,z)[alpha(z),[x,y]] = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        AlgebraElement defect;
        auto term = [&](std::size_t x, std::size_t y, std::size_t z) {
          AlgebraElement inner = A.bracket.at(y, z);
          AlgebraElement outer = bracket_eval(A, A.alpha_column(x), inner);
          sparsevec_add(defect, outer, A.epsilon.value(A.degree(z), A.degree(x)));
        };
        term(i, j, k);
        term(j, k, i);
        term(k, i, j);
        if (!defect.empty())
          report.add("hom-jacobi", "(" + name(i) + "," + name(j) + "," + name(k) + ")",
                     format_element(A.basis, defect));
      }

  if (A.involutive_flag) {
    Matrix sq = A.alpha * A.alpha;
    if (!sq.is_identity())
      for (std::size_t j = 0; j < n; ++j) {
        AlgebraElement defect = apply_matrix(sq, unit_element(j));
        sparsevec_add(defect, unit_element(j), Scalar(-1));
        if (!defect.empty())
          report.add("involutive", "alpha^2(" + name(j) + ")", format_element(A.basis, defect));
      }
  }

  if (A.multiplicative_flag) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        AlgebraElement lhs = apply_matrix(A.alpha, A.bracket.at(i, j));
        AlgebraElement rhs = bracket_eval(A, A.alpha_column(i), A.alpha_column(j));
        sparsevec_add(lhs, rhs, Scalar(-1));
        if (!lhs.empty())
          report.add("multiplicative", "(" + name(i) + "," + name(j) + ")",
                     format_element(A.basis, lhs));
      }
  }

  return report;
}

// Composes the bracket of an ordinary Lie color algebra (alpha = id) with a
// morphism sigma, yielding the multiplicative color hom-Lie algebra
// (g, sigma o [.,.], eps, sigma).
inline ColorHomLieAlgebra yau_twist(const ColorHomLieAlgebra& L, const Matrix& sigma) {
  const std::size_t n = L.dim();
  if (!L.alpha.is_identity())
    throw std::invalid_argument("yau_twist expects an ordinary Lie color algebra (alpha = id)");
  if (sigma.rows() != n || sigma.cols() != n)
    throw std::invalid_argument("yau_twist: sigma shape mismatch");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!sigma.at(i, j).is_zero() && L.degree(i) != L.degree(j))
        throw std::invalid_argument("yau_twist: sigma is not even at basis element '" +
                                    L.basis.names[j] + "'");
  auto sigma_col = [&](std::size_t j) {
    SparseVec col;
    for (std::size_t i = 0; i < n; ++i)
      if (!sigma.at(i, j).is_zero()) col.emplace_back(i, sigma.at(i, j));
    return col;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement lhs = apply_matrix(sigma, L.bracket.at(i, j));
      AlgebraElement rhs = bracket_eval(L, sigma_col(i), sigma_col(j));
      sparsevec_add(lhs, rhs, Scalar(-1));
      if (!lhs.empty())
        throw std::invalid_argument("yau_twist: sigma is not a morphism at pair (" +
                                    L.basis.names[i] + "," + L.basis.names[j] + ")");
    }
  ColorHomLieAlgebra out;
  out.basis = L.basis;
  out.epsilon = L.epsilon;
  out.alpha = sigma;
  for (const auto& [key, v] : L.bracket.constants)
    out.bracket.set(key.first, key.second, apply_matrix(sigma, v));
  out.multiplicative_flag = true;
  out.involutive_flag = (sigma * sigma).is_identity();
  return out;
}

// Hom-associative color algebra by multiplication table.
struct HomAssociativeAlgebra {
  GradedBasis basis;
  CommutationFactor epsilon;
  BracketTable table;  // (i, j) -> e_i * e_j
  Matrix alpha;

  std::size_t dim() const { return basis.dim(); }
};

inline AlgebraElement product_eval(const HomAssociativeAlgebra& V, const AlgebraElement& x,
                                   const AlgebraElement& y) {
  AlgebraElement r;
  for (const auto& [i, cx] : x)
    for (const auto& [j, cy] : y) sparsevec_add(r, V.table.at(i, j), cx * cy);
  return r;
}

// [x,y] := xy - eps(x,y) yx.  The multiplication must satisfy
// alpha(x)(yz) = (xy)alpha(z) and the grading axiom, checked here with a
// witness triple on failure.
inline ColorHomLieAlgebra antisymmetrize(const HomAssociativeAlgebra& V) {
  const std::size_t n = V.dim();
  const GradingGroup& g = V.epsilon.group();
  auto alpha_col = [&](std::size_t j) {
    SparseVec col;
    for (std::size_t i = 0; i < n; ++i)
      if (!V.alpha.at(i, j).is_zero()) col.emplace_back(i, V.alpha.at(i, j));
    return col;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Degree sum = g.add(V.basis.degrees[i], V.basis.degrees[j]);
      for (const auto& [k, c] : V.table.at(i, j)) {
        (void)c;
        if (V.basis.degrees[k] != sum)
          throw std::invalid_argument("antisymmetrize: product table violates the grading at (" +
                                      V.basis.names[i] + "," + V.basis.names[j] + ")");
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        AlgebraElement lhs = product_eval(V, alpha_col(i), V.table.at(j, k));
        AlgebraElement rhs = product_eval(V, V.table.at(i, j), alpha_col(k));
        sparsevec_add(lhs, rhs, Scalar(-1));
        if (!lhs.empty())
          throw std::invalid_argument("antisymmetrize: not hom-associative at triple (" +
                                      V.basis.names[i] + "," + V.basis.names[j] + "," +
                                      V.basis.names[k] + ")");
      }
  ColorHomLieAlgebra out;
  out.basis = V.basis;
  out.epsilon = V.epsilon;
  out.alpha = V.alpha;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement v = V.table.at(i, j);
      sparsevec_add(v, V.table.at(j, i), -V.epsilon.value(V.basis.degrees[i], V.basis.degrees[j]));
      out.bracket.set(i, j, std::move(v));
    }
  out.involutive_flag = (V.alpha * V.alpha).is_identity();
  // record multiplicativity of the inherited twist for the derived bracket
  out.multiplicative_flag = true;
  for (std::size_t i = 0; i < n && out.multiplicative_flag; ++i)
    for (std::size_t j = 0; j < n && out.multiplicative_flag; ++j) {
      AlgebraElement lhs = apply_matrix(out.alpha, out.bracket.at(i, j));
      AlgebraElement rhs = bracket_eval(out, alpha_col(i), alpha_col(j));
      sparsevec_add(lhs, rhs, Scalar(-1));
      if (!lhs.empty()) out.multiplicative_flag = false;
    }
  return out;
}

// Checks that f is an even map intertwining the twists and preserving
// brackets on basis pairs.
inline VerificationReport morphism_check(const Matrix& f, const ColorHomLieAlgebra& A,
                                         const ColorHomLieAlgebra& B) {
  if (f.rows() != B.dim() || f.cols() != A.dim())
    throw std::invalid_argument("morphism_check: map shape mismatch");
  if (!(A.epsilon.group() == B.epsilon.group()))
    throw std::invalid_argument("morphism_check: grading groups differ");
  VerificationReport report;
  const std::size_t n = A.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < B.dim(); ++i)
      if (!f.at(i, j).is_zero() && B.degree(i) != A.degree(j))
        report.add("even", "f(" + A.basis.names[j] + ") -> " + B.basis.names[i],
                   f.at(i, j).str());
  auto f_col = [&](std::size_t j) {
    SparseVec col;
    for (std::size_t i = 0; i < B.dim(); ++i)
      if (!f.at(i, j).is_zero()) col.emplace_back(i, f.at(i, j));
    return col;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement lhs = apply_matrix(f, A.bracket.at(i, j));
      AlgebraElement rhs = bracket_eval(B, f_col(i), f_col(j));
      sparsevec_add(lhs, rhs, Scalar(-1));
      if (!lhs.empty())
        report.add("bracket-preservation", "(" + A.basis.names[i] + "," + A.basis.names[j] + ")",
                   format_element(B.basis, lhs));
    }
  Matrix lhs = f * A.alpha;
  Matrix rhs = B.alpha * f;
  if (!(lhs == rhs))
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement d = apply_matrix(lhs, unit_element(j));
      sparsevec_add(d, apply_matrix(rhs, unit_element(j)), Scalar(-1));
      if (!d.empty())
        report.add("twist-intertwining", A.basis.names[j], format_element(B.basis, d));
    }
  return report;
}

}  // namespace colorpbw
