#pragma once

// Seeded generators for property tests: graded modules with exact involutive
// even twists, central-extension color hom-Lie algebras (Jacobi holds because
// every bracket is central), and random tensor elements.

#include <colorpbw/colorpbw.hpp>

#include <random>
#include <vector>

namespace testsupport {

using namespace colorpbw;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng), den(rng));
}

// Involutive matrix preserving the degree blocks: conjugates a random +-1
// diagonal by a random unit-triangular (hence exactly invertible) map inside
// each block.
inline Matrix random_involutive_even(Rng& rng, const std::vector<Degree>& degrees) {
  std::size_t n = degrees.size();
  Matrix out(n, n);
  std::map<Degree, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[degrees[i]].push_back(i);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> small(-2, 2);
  for (const auto& [deg, idx] : blocks) {
    std::size_t b = idx.size();
    Matrix d(b, b), q(b, b);
    for (std::size_t i = 0; i < b; ++i) d.at(i, i) = Scalar(sign(rng) ? 1 : -1);
    for (std::size_t i = 0; i < b; ++i) {
      q.at(i, i) = Scalar(1);
      for (std::size_t j = i + 1; j < b; ++j) q.at(i, j) = Scalar(small(rng));
    }
    Matrix blk = q * d * invert(q);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) out.at(idx[i], idx[j]) = blk.at(i, j);
  }
  return out;
}

inline GradingGroup random_group(Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return GradingGroup({1});
    case 1: return GradingGroup({2});
    case 2: return GradingGroup({2, 2});
    default: return GradingGroup({3});
  }
}

inline CommutationFactor random_factor(Rng& rng, const GradingGroup& g) {
  std::vector<std::vector<long>> p(g.rank(), std::vector<long>(g.rank(), 0));
  long n = static_cast<long>(g.exponent());
  std::uniform_int_distribution<long> entry(0, n - 1);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    // diagonal: 2 P_ii = 0 mod N
    if (n % 2 == 0) p[i][i] = entry(rng) % 2 == 0 ? 0 : n / 2;
    for (std::size_t j = i + 1; j < g.rank(); ++j) {
      long ndmi = n / g.moduli()[i], ndmj = n / g.moduli()[j];
      long step = std::lcm(ndmi, ndmj);
      long v = (entry(rng) / step) * step;
      p[i][j] = v;
      p[j][i] = (n - v) % n;
    }
  }
  return CommutationFactor::from_pairing(g, p);
}

// Graded module with an involutive even twist and zero bracket; enough for
// every tensor-algebra property.
inline ColorHomLieAlgebra random_module(Rng& rng, std::size_t dim) {
  GradingGroup g = random_group(rng);
  ColorHomLieAlgebra A;
  A.epsilon = random_factor(rng, g);
  std::uniform_int_distribution<std::size_t> deg(0, g.size() - 1);
  for (std::size_t i = 0; i < dim; ++i) {
    A.basis.names.push_back("m" + std::to_string(i + 1));
    A.basis.degrees.push_back(g.element(deg(rng)));
  }
  A.alpha = random_involutive_even(rng, A.basis.degrees);
  A.involutive_flag = true;
  A.multiplicative_flag = true;
  return A;
}

// Central extension: brackets land in a central even generator c, making the
// hom-Jacobi identity automatic; a diagonal twist fixing c multiplicatively.
inline ColorHomLieAlgebra random_central_extension(Rng& rng, std::size_t generators) {
  GradingGroup g = random_group(rng);
  ColorHomLieAlgebra A;
  A.epsilon = random_factor(rng, g);
  std::uniform_int_distribution<std::size_t> deg(0, g.size() - 1);
  for (std::size_t i = 0; i < generators; ++i) {
    A.basis.names.push_back("g" + std::to_string(i + 1));
    A.basis.degrees.push_back(g.element(deg(rng)));
  }
  A.basis.names.push_back("c");
  A.basis.degrees.push_back(g.zero());
  std::size_t n = generators + 1;
  std::size_t c = generators;
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> s(n);
  for (auto& v : s) v = sign(rng) ? 1 : -1;
  A.alpha = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) A.alpha.at(i, i) = Scalar(s[i]);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < generators; ++i)
    for (std::size_t j = i + 1; j < generators; ++j) {
      // sigma multiplicativity for a central bracket needs s_i s_j = s_c
      if (s[i] * s[j] != s[c]) continue;
      if (A.epsilon.group().add(A.basis.degrees[i], A.basis.degrees[j]) != g.zero()) continue;
      if (coin(rng) == 0) continue;
      Scalar v(random_rational(rng, 3));
      if (v.is_zero()) v = Scalar(1);
      A.bracket.set(i, j, {{c, v}});
      A.bracket.set(j, i, {{c, -(A.epsilon.value(A.basis.degrees[j], A.basis.degrees[i]) * v)}});
    }
  // eps-skew for the diagonal-free table above: [j,i] = -eps(j,i)[i,j]
  A.involutive_flag = true;
  A.multiplicative_flag = true;
  return A;
}

inline TensorElement random_tensor_element(Rng& rng, std::size_t dim, std::size_t max_len,
                                           std::size_t max_terms = 2) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, dim - 1);
  TensorElement t;
  std::size_t k = nterms(rng);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> ls(len(rng));
    for (auto& l : ls) l = letter(rng);
    Scalar c(random_rational(rng, 3));
    if (c.is_zero()) c = Scalar(1);
    t.add(Word(std::move(ls)), c);
  }
  return t;
}

inline Word random_word(Rng& rng, std::size_t dim, std::size_t len) {
  std::uniform_int_distribution<std::size_t> letter(0, dim - 1);
  std::vector<std::size_t> ls(len);
  for (auto& l : ls) l = letter(rng);
  return Word(std::move(ls));
}

}  // namespace testsupport
