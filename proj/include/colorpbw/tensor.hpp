#pragma once

// The hom-tensor algebra T(M) = \bigoplus_{i>=1} M^{\otimes i} over the
// module underlying a color hom-Lie algebra: pure-tensor words, the
// letterwise twist alpha_T, the twisted product
//
//   x (.) y = alpha_T^{m-1}(x) (x) y_1 (x) alpha_T(y_2 (x) ... (x) y_m),
//
// m the length of the right factor, the involution theta applying the twist
// at tensor positions 3, 5, 7, ..., and evaluation of the unique
// hom-associative extension of a module map (the free-object property).
//
// There is no empty word and no unit; words start at length 1.

#include "algebra.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorpbw {

struct Word {
  std::vector<std::size_t> letters;

  Word() = default;
  explicit Word(std::vector<std::size_t> l) : letters(std::move(l)) {
    if (letters.empty()) throw std::invalid_argument("tensor words must be nonempty");
  }

  std::size_t length() const { return letters.size(); }

  bool non_increasing() const {
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] < letters[i + 1]) return false;
    return true;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }
};

inline Degree word_degree(const ColorHomLieAlgebra& A, const Word& w) {
  Degree d = A.epsilon.group().zero();
  for (std::size_t letter : w.letters) d = A.epsilon.group().add(d, A.degree(letter));
  return d;
}

// Finite linear combination of words, canonically sparse.
struct TensorElement {
  std::map<Word, Scalar> terms;

  static TensorElement pure(Word w, Scalar c = Scalar(1)) {
    TensorElement t;
    if (!c.is_zero()) t.terms.emplace(std::move(w), std::move(c));
    return t;
  }
  static TensorElement pure(std::vector<std::size_t> letters, Scalar c = Scalar(1)) {
    return pure(Word(std::move(letters)), std::move(c));
  }

  bool is_zero() const { return terms.empty(); }

  void add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
      terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  TensorElement& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms.clear();
      return *this;
    }
    for (auto& [w, c] : terms) c *= s;
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& s, TensorElement a) { return a *= s; }
  friend TensorElement operator-(TensorElement a) { return a *= Scalar(-1); }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms == b.terms;
  }
};

namespace detail {

// Expands one pure word through a per-position substitution
// letter -> sparse combination of letters, multilinearly.
inline TensorElement expand_word(
    const Word& w, const Scalar& coeff,
    const std::function<const SparseVec*(std::size_t pos, std::size_t letter)>& subst) {
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> partial;
  partial.emplace_back(std::vector<std::size_t>{}, coeff);
  for (std::size_t pos = 0; pos < w.length(); ++pos) {
    const SparseVec* col = subst(pos, w.letters[pos]);
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
    if (col == nullptr) {
      next = std::move(partial);
      for (auto& [ls, c] : next) ls.push_back(w.letters[pos]);
    } else {
      for (const auto& [ls, c] : partial)
        for (const auto& [target, factor] : *col) {
          auto ext = ls;
          ext.push_back(target);
          next.emplace_back(std::move(ext), c * factor);
        }
    }
    partial = std::move(next);
  }
  TensorElement out;
  for (auto& [ls, c] : partial) out.add(Word(std::move(ls)), c);
  return out;
}

inline std::vector<SparseVec> matrix_columns(const Matrix& m) {
  std::vector<SparseVec> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero()) cols[j].emplace_back(i, m.at(i, j));
  return cols;
}

}  // namespace detail

// Letterwise twist: alpha_T(x_1 (x) ... (x) x_i) = alpha(x_1) (x) ... (x) alpha(x_i),
// extended multilinearly (alpha need not permute the basis).
inline TensorElement alpha_T(const ColorHomLieAlgebra& A, const TensorElement& t) {
  auto cols = detail::matrix_columns(A.alpha);
  TensorElement out;
  for (const auto& [w, c] : t.terms)
    out += detail::expand_word(w, c,
                               [&](std::size_t, std::size_t letter) { return &cols[letter]; });
  return out;
}

// alpha_T^k; an involutive twist only needs the parity of k.
inline TensorElement alpha_T_pow(const ColorHomLieAlgebra& A, TensorElement t, unsigned long k) {
  if (A.involutive_flag) k %= 2;
  for (unsigned long i = 0; i < k; ++i) t = alpha_T(A, t);
  return t;
}

// Plain tensor concatenation, bilinear.
inline TensorElement tensor_concat(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [wx, cx] : x.terms)
    for (const auto& [wy, cy] : y.terms) {
      auto letters = wx.letters;
      letters.insert(letters.end(), wy.letters.begin(), wy.letters.end());
      out.add(Word(std::move(letters)), cx * cy);
    }
  return out;
}

// The twisted product.  Requires an involutive twist (so that
// alpha_T^{m-1} reduces to a parity).
inline TensorElement odot(const ColorHomLieAlgebra& A, const TensorElement& x,
                          const TensorElement& y) {
  auto cols = detail::matrix_columns(A.alpha);
  TensorElement out;
  for (const auto& [wy, cy] : y.terms) {
    std::size_t m = wy.length();
    // alpha at positions 2..m of the right factor, head letter untouched
    TensorElement right = detail::expand_word(
        wy, cy, [&](std::size_t pos, std::size_t letter) -> const SparseVec* {
          return pos == 0 ? nullptr : &cols[letter];
        });
    for (const auto& [wx, cx] : x.terms) {
      TensorElement left = alpha_T_pow(A, TensorElement::pure(wx, cx), m - 1);
      out += tensor_concat(left, right);
    }
  }
  return out;
}

// The involution aligning the commutator ideal with its straightening-ready
// relator space: applies the twist at tensor positions 3, 5, 7, ...
inline TensorElement theta(const ColorHomLieAlgebra& A, const TensorElement& t) {
  auto cols = detail::matrix_columns(A.alpha);
  TensorElement out;
  for (const auto& [w, c] : t.terms)
    out += detail::expand_word(w, c,
                               [&](std::size_t pos, std::size_t letter) -> const SparseVec* {
                                 // 0-based: twist positions 2, 4, 6, ...
                                 return (pos >= 2 && pos % 2 == 0) ? &cols[letter] : nullptr;
                               });
  return out;
}

// --- free extension --------------------------------------------------------
//
// Target adaptors expose the handful of operations the evaluator needs.

struct TableAlgebraTarget {
  const HomAssociativeAlgebra& algebra;
  using Element = AlgebraElement;

  Element mul(const Element& a, const Element& b) const { return product_eval(algebra, a, b); }
  Element twist(const Element& a) const { return apply_matrix(algebra.alpha, a); }
  static bool equal(const Element& a, const Element& b) { return a == b; }
  static void add_scaled(Element& acc, const Element& x, const Scalar& c) {
    sparsevec_add(acc, x, c);
  }
};

struct TensorAlgebraTarget {
  const ColorHomLieAlgebra& module;
  using Element = TensorElement;

  Element mul(const Element& a, const Element& b) const { return odot(module, a, b); }
  Element twist(const Element& a) const { return alpha_T(module, a); }
  static bool equal(const Element& a, const Element& b) { return a == b; }
  static void add_scaled(Element& acc, const Element& x, const Scalar& c) {
    Element scaled = x;
    scaled *= c;
    acc += scaled;
  }
};

// Evaluator for the unique hom-associative extension of a module map f.
// Words evaluate through the left-nested factorisation
// w = ((x_1 (.) x_2) (.) x_3) (.) ... (.) x_n, which is valid because
// right-multiplication by single letters is plain concatenation.
template <class Target>
struct FreeExtension {
  Target target;
  std::vector<typename Target::Element> images;  // f(e_j) per module basis index

  typename Target::Element eval(const TensorElement& t) const {
    typename Target::Element acc{};
    for (const auto& [w, c] : t.terms) {
      typename Target::Element cur = images.at(w.letters[0]);
      for (std::size_t k = 1; k < w.length(); ++k)
        cur = target.mul(cur, images.at(w.letters[k]));
      Target::add_scaled(acc, cur, c);
    }
    return acc;
  }
};

// Checks the twist-intertwining precondition f o alpha = alpha_target o f on
// every basis element, then returns the evaluator.
template <class Target>
FreeExtension<Target> free_extension(const ColorHomLieAlgebra& module, Target target,
                                     std::vector<typename Target::Element> images) {
  if (images.size() != module.dim())
    throw std::invalid_argument("free_extension: one image per module basis element required");
  for (std::size_t j = 0; j < module.dim(); ++j) {
    typename Target::Element lhs{};  // f(alpha e_j)
    for (std::size_t i = 0; i < module.dim(); ++i)
      if (!module.alpha.at(i, j).is_zero())
        Target::add_scaled(lhs, images[i], module.alpha.at(i, j));
    typename Target::Element rhs = target.twist(images[j]);
    if (!Target::equal(lhs, rhs))
      throw std::invalid_argument(
          "free_extension: map does not intertwine the twists at basis element '" +
          module.basis.names[j] + "'");
  }
  return FreeExtension<Target>{std::move(target), std::move(images)};
}

inline std::string format_tensor_element(const GradedBasis& basis, const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : t.terms) {
    if (!s.empty()) s += " + ";
    s += c.str();
    for (std::size_t letter : w.letters) s += " " + basis.names[letter];
  }
  return s;
}

}  // namespace colorpbw
