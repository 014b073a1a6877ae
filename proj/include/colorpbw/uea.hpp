#pragma once

// The universal enveloping algebra U(g) = T(g)/I of an involutive color
// hom-Lie algebra, via
//
//   * an alpha-stable well-ordered basis X with tau(X) = X for tau = mu*alpha
//     (mu = +-1 fixed by comparing eigenspace sizes degree by degree),
//   * the commutator relators a(x)b - eps(a,b) b(x)a - [a,b] generating the
//     hom-ideal I, and their twisted-flank images J_mu,
//   * the straightening operator S projecting onto the span of
//     non-increasing words along J_mu, and
//   * an independent linear-algebra oracle checking
//     rank(J_mu) + #W = dim T with zero intersection, no rewriting involved.
//
// Classes of U(g) are written in the basis pi(theta(W)); normal_form is
// S o theta.

#include "algebra.hpp"
#include "linalg.hpp"
#include "report.hpp"
#include "tensor.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colorpbw {

struct BasisConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Strategy { leftmost, rightmost };

// Coordinates of a class of U(g): a combination of non-increasing words w,
// each standing for pi(theta(w)).
struct NormalForm {
  std::map<Word, Scalar> terms;

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

  TensorElement to_tensor() const {
    TensorElement t;
    t.terms = terms;
    return t;
  }

  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.terms == b.terms; }
};

struct UEAContext {
  ColorHomLieAlgebra algebra;    // as given
  ColorHomLieAlgebra xalgebra;   // the same algebra in the basis X
  Matrix change;                 // column j = X_j in original coordinates
  Matrix change_inv;
  Scalar mu;                     // +1 or -1
  std::vector<std::size_t> tau_perm;  // tau = mu*alpha acts on X as this permutation

  std::size_t dim() const { return xalgebra.dim(); }
};

// Builds X = {i(x)+x, i(x)-x | x in B_-} u (B_+ \ i(B_-)) from the +-1
// eigenspaces of the twist, degree by degree, flipping the twist sign (and
// mu) when the minus side is the larger one.  The injection i is
// degree-preserving; when neither direction admits one the construction is
// unavailable and we fail loudly.
inline UEAContext build_alpha_stable_basis(const ColorHomLieAlgebra& A) {
  const std::size_t n = A.dim();
  if (n == 0) throw BasisConstructionError("empty algebra");
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!A.alpha.at(i, j).is_zero() && A.degree(i) != A.degree(j))
        throw BasisConstructionError("twist is not even at basis element '" + A.basis.names[j] +
                                     "'");
  if (!(A.alpha * A.alpha).is_identity())
    throw BasisConstructionError("twist is not involutive");

  std::map<Degree, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[A.degree(i)].push_back(i);

  struct Eigen {
    Degree degree;
    std::vector<std::vector<Scalar>> plus, minus;  // full-length vectors
  };
  std::vector<Eigen> eigens;
  for (const auto& [deg, idx] : blocks) {
    std::size_t b = idx.size();
    Eigen e;
    e.degree = deg;
    for (int lambda : {+1, -1}) {
      Matrix sub(b, b);
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c) {
          sub.at(r, c) = A.alpha.at(idx[r], idx[c]);
          if (r == c) sub.at(r, c) -= Scalar(lambda);
        }
      auto ker = kernel_basis(sub);
      auto& dst = lambda > 0 ? e.plus : e.minus;
      for (const auto& kv : ker) {
        std::vector<Scalar> full(n, Scalar(0));
        for (std::size_t c = 0; c < b; ++c) full[idx[c]] = kv[c];
        dst.push_back(std::move(full));
      }
    }
    eigens.push_back(std::move(e));
  }

  bool plus_ok = true, minus_ok = true;
  for (const auto& e : eigens) {
    if (e.plus.size() < e.minus.size()) plus_ok = false;
    if (e.minus.size() < e.plus.size()) minus_ok = false;
  }
  long mu_sign;
  if (plus_ok) {
    mu_sign = 1;
  } else if (minus_ok) {
    mu_sign = -1;
  } else {
    std::string witness;
    for (const auto& e : eigens)
      if (e.plus.size() != e.minus.size())
        witness += (witness.empty() ? "" : ", ") + degree_str(e.degree) + " has +:" +
                   std::to_string(e.plus.size()) + " -:" + std::to_string(e.minus.size());
    throw BasisConstructionError(
        "no degree-preserving eigenvector pairing exists in either direction (" + witness + ")");
  }

  // columns of the new basis, eigen-pairs first, then leftovers by leading
  // original index
  std::vector<std::vector<Scalar>> cols;
  std::vector<Degree> degs;
  std::vector<std::size_t> perm;
  std::vector<std::pair<std::size_t, std::pair<std::vector<Scalar>, Degree>>> leftovers;
  for (const auto& e : eigens) {
    const auto& big = mu_sign > 0 ? e.plus : e.minus;
    const auto& small = mu_sign > 0 ? e.minus : e.plus;
    for (std::size_t t = 0; t < small.size(); ++t) {
      std::vector<Scalar> sum(n), diff(n);
      for (std::size_t i = 0; i < n; ++i) {
        sum[i] = big[t][i] + small[t][i];
        diff[i] = big[t][i] - small[t][i];
      }
      std::size_t k = cols.size();
      cols.push_back(std::move(sum));
      cols.push_back(std::move(diff));
      degs.push_back(e.degree);
      degs.push_back(e.degree);
      perm.push_back(k + 1);
      perm.push_back(k);
    }
    for (std::size_t t = small.size(); t < big.size(); ++t) {
      std::size_t lead = 0;
      while (lead < n && big[t][lead].is_zero()) ++lead;
      leftovers.push_back({lead, {big[t], e.degree}});
    }
  }
  std::sort(leftovers.begin(), leftovers.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [lead, cv] : leftovers) {
    (void)lead;
    cols.push_back(std::move(cv.first));
    degs.push_back(cv.second);
    perm.push_back(cols.size() - 1);
  }

  UEAContext ctx;
  ctx.algebra = A;
  ctx.mu = Scalar(mu_sign);
  ctx.tau_perm = std::move(perm);
  ctx.change = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) ctx.change.at(i, j) = cols[j][i];
  ctx.change_inv = invert(ctx.change);

  ColorHomLieAlgebra& X = ctx.xalgebra;
  X.epsilon = A.epsilon;
  X.basis.degrees = std::move(degs);
  for (std::size_t j = 0; j < n; ++j) {
    // keep the original name when X_j is that plain basis vector
    long unit = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (ctx.change.at(i, j).is_zero()) continue;
      if (unit >= 0 || !ctx.change.at(i, j).is_one()) {
        unit = -2;
        break;
      }
      unit = static_cast<long>(i);
    }
    std::string name = unit >= 0 ? A.basis.names[static_cast<std::size_t>(unit)]
                                 : "X" + std::to_string(j + 1);
    while (unit < 0 &&
           std::find(A.basis.names.begin(), A.basis.names.end(), name) != A.basis.names.end())
      name += "'";
    X.basis.names.push_back(std::move(name));
  }
  X.alpha = ctx.change_inv * A.alpha * ctx.change;
  X.involutive_flag = true;
  X.multiplicative_flag = A.multiplicative_flag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement xi, xj;
      for (std::size_t r = 0; r < n; ++r) {
        if (!ctx.change.at(r, i).is_zero()) xi.emplace_back(r, ctx.change.at(r, i));
        if (!ctx.change.at(r, j).is_zero()) xj.emplace_back(r, ctx.change.at(r, j));
      }
      AlgebraElement w = bracket_eval(A, xi, xj);
      X.bracket.set(i, j, apply_matrix(ctx.change_inv, w));
    }

  // internal consistency: the conjugated twist is mu times the X permutation
  Matrix expect(n, n);
  for (std::size_t j = 0; j < n; ++j) expect.at(ctx.tau_perm[j], j) = ctx.mu;
  if (!(X.alpha == expect))
    throw std::logic_error("alpha-stable basis construction produced a non-permutation twist");
  return ctx;
}

// Rewrites an element over the original basis into X coordinates, letter by
// letter.
inline TensorElement to_x_coordinates(const UEAContext& ctx, const TensorElement& t) {
  auto cols = detail::matrix_columns(ctx.change_inv);
  TensorElement out;
  for (const auto& [w, c] : t.terms)
    out += detail::expand_word(w, c,
                               [&](std::size_t, std::size_t letter) { return &cols[letter]; });
  return out;
}

// All non-increasing words of the given length, largest first; there are
// C(dim+len-1, len) of them.
inline std::vector<Word> pbw_words(std::size_t dim, std::size_t len) {
  if (len == 0) throw std::invalid_argument("pbw_words: length must be >= 1");
  std::vector<Word> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t maxletter) -> void {
    if (cur.size() == len) {
      out.push_back(Word(cur));
      return;
    }
    for (std::size_t l = maxletter + 1; l-- > 0;) {
      cur.push_back(l);
      self(self, l);
      cur.pop_back();
    }
  };
  rec(rec, dim - 1);
  return out;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> all_words(std::size_t dim, std::size_t len) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(len, 0);
  if (len == 0) {
    out.push_back(cur);
    return out;
  }
  while (true) {
    out.push_back(cur);
    std::size_t k = len;
    while (k > 0) {
      if (++cur[k - 1] < dim) break;
      cur[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

inline std::vector<std::size_t> permute_letters(const std::vector<std::size_t>& letters,
                                                const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> out(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) out[i] = perm[letters[i]];
  return out;
}

}  // namespace detail

// Spanning set of I intersected with words of length <= max_len: every
// (w1 (.) g_ab) (.) w2 over X-words w1, w2 (empty factor = omitted) and
// basis pairs a != b, with g_ab = a(x)b - eps(a,b) b(x)a - [a,b].
inline std::vector<TensorElement> ideal_generators(const UEAContext& ctx, std::size_t max_len) {
  if (max_len < 2) throw std::invalid_argument("ideal_generators: max_len must be >= 2");
  const ColorHomLieAlgebra& X = ctx.xalgebra;
  const std::size_t d = X.dim();
  std::vector<TensorElement> out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b) continue;
      TensorElement g = TensorElement::pure({a, b});
      g.add(Word({b, a}), -X.eps(a, b));
      for (const auto& [k, c] : X.bracket.at(a, b)) g.add(Word({k}), -c);
      for (std::size_t nl = 0; nl + 2 <= max_len; ++nl)
        for (std::size_t ml = 0; nl + ml + 2 <= max_len; ++ml)
          for (const auto& w1 : detail::all_words(d, nl)) {
            TensorElement left = nl == 0 ? g : odot(X, TensorElement::pure(w1), g);
            for (const auto& w2 : detail::all_words(d, ml)) {
              TensorElement full =
                  ml == 0 ? left : odot(X, left, TensorElement::pure(w2));
              if (!full.is_zero()) out.push_back(std::move(full));
            }
          }
    }
  return out;
}

// Spanning set of J_mu up to the given length:
//   a (x) (a(x)b - eps(a,b) b(x)a) (x) b  -  mu^{n+m} tau(a) (x) [a,b] (x) tau(b)
// with flanks running over X-words and tau acting as the letter permutation.
inline std::vector<TensorElement> j_mu_generators(const UEAContext& ctx, std::size_t max_len,
                                                  const Scalar& mu) {
  if (max_len < 2) throw std::invalid_argument("j_mu_generators: max_len must be >= 2");
  const ColorHomLieAlgebra& X = ctx.xalgebra;
  const std::size_t d = X.dim();
  std::vector<TensorElement> out;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (a == b) continue;
      const Scalar& eps = X.eps(a, b);
      const SparseVec& br = X.bracket.at(a, b);
      for (std::size_t nl = 0; nl + 2 <= max_len; ++nl)
        for (std::size_t ml = 0; nl + ml + 2 <= max_len; ++ml) {
          Scalar mu_pow = mu.pow(nl + ml);
          for (const auto& w1 : detail::all_words(d, nl))
            for (const auto& w2 : detail::all_words(d, ml)) {
              TensorElement t;
              auto mk = [&](std::size_t u, std::size_t v) {
                std::vector<std::size_t> ls = w1;
                ls.push_back(u);
                ls.push_back(v);
                ls.insert(ls.end(), w2.begin(), w2.end());
                return Word(std::move(ls));
              };
              t.add(mk(a, b), Scalar(1));
              t.add(mk(b, a), -eps);
              if (!br.empty()) {
                auto p1 = detail::permute_letters(w1, ctx.tau_perm);
                auto p2 = detail::permute_letters(w2, ctx.tau_perm);
                for (const auto& [k, c] : br) {
                  std::vector<std::size_t> ls = p1;
                  ls.push_back(k);
                  ls.insert(ls.end(), p2.begin(), p2.end());
                  t.add(Word(std::move(ls)), -(mu_pow * c));
                }
              }
              if (!t.is_zero()) out.push_back(std::move(t));
            }
        }
    }
  return out;
}

inline std::vector<TensorElement> j_mu_generators(const UEAContext& ctx, std::size_t max_len) {
  return j_mu_generators(ctx, max_len, ctx.mu);
}

namespace detail {

inline unsigned long straighten_budget(std::size_t maxlen, std::size_t nterms) {
  // 10 * (length!) * (max index + 1) per input term, a generous guard: the
  // (length, inversion-index) measure strictly decreases, so running out
  // signals a rewriting bug, not a long computation.
  constexpr unsigned long cap = std::numeric_limits<unsigned long>::max();
  auto sat_mul = [](unsigned long a, unsigned long b) {
    return (b != 0 && a > cap / b) ? cap : a * b;
  };
  unsigned long budget = 10;
  for (std::size_t i = 2; i <= maxlen; ++i) budget = sat_mul(budget, i);
  budget = sat_mul(budget, maxlen < 2 ? 1 : maxlen * (maxlen - 1) / 2 + 1);
  return sat_mul(budget, std::max<std::size_t>(1, nterms));
}

}  // namespace detail

// The straightening operator S: fixes non-increasing words and resolves an
// adjacent inversion x_a (x) x_b (a < b in the X order) by
//
//   S(p (x) x_a (x) x_b (x) s) = eps(a,b) S(p (x) x_b (x) x_a (x) s)
//                              + mu^{len-2} S(tau(p) (x) [x_a,x_b] (x) tau(s)).
//
// Which inversion is resolved first is the strategy; the result does not
// depend on it (tested as the confluence oracle).
inline NormalForm straighten(const UEAContext& ctx, const TensorElement& t, Strategy strategy,
                             const Scalar& mu) {
  const ColorHomLieAlgebra& X = ctx.xalgebra;
  const std::size_t d = X.dim();
  std::size_t maxlen = 0;
  for (const auto& [w, c] : t.terms) {
    (void)c;
    maxlen = std::max(maxlen, w.length());
    for (std::size_t letter : w.letters)
      if (letter >= d) throw std::invalid_argument("straighten: word letter outside the basis");
  }
  unsigned long budget = detail::straighten_budget(maxlen, t.terms.size());

  std::map<Word, Scalar> pending = t.terms;
  NormalForm out;
  auto push = [&](Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = pending.find(w);
    if (it == pending.end()) {
      pending.emplace(std::move(w), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };

  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = it->first;
    Scalar coeff = it->second;
    pending.erase(it);

    long pos = -1;
    const auto& ls = w.letters;
    if (strategy == Strategy::leftmost) {
      for (std::size_t s = 0; s + 1 < ls.size(); ++s)
        if (ls[s] < ls[s + 1]) {
          pos = static_cast<long>(s);
          break;
        }
    } else {
      for (std::size_t s = ls.size() - 1; s-- > 0;)
        if (ls[s] < ls[s + 1]) {
          pos = static_cast<long>(s);
          break;
        }
    }
    if (pos < 0) {
      out.add(w, coeff);
      continue;
    }
    if (budget-- == 0)
      throw std::logic_error("straighten: rewrite budget exceeded (termination bug)");

    std::size_t s = static_cast<std::size_t>(pos);
    std::size_t a = ls[s], b = ls[s + 1];
    Word swapped = w;
    std::swap(swapped.letters[s], swapped.letters[s + 1]);
    push(std::move(swapped), coeff * X.eps(a, b));

    const SparseVec& br = X.bracket.at(a, b);
    if (!br.empty()) {
      Scalar factor = coeff * mu.pow(w.length() - 2);
      std::vector<std::size_t> prefix(ls.begin(), ls.begin() + pos);
      std::vector<std::size_t> suffix(ls.begin() + pos + 2, ls.end());
      prefix = detail::permute_letters(prefix, ctx.tau_perm);
      suffix = detail::permute_letters(suffix, ctx.tau_perm);
      for (const auto& [k, c] : br) {
        std::vector<std::size_t> nw = prefix;
        nw.push_back(k);
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        push(Word(std::move(nw)), factor * c);
      }
    }
  }
  return out;
}

inline NormalForm straighten(const UEAContext& ctx, const TensorElement& t,
                             Strategy strategy = Strategy::leftmost) {
  return straighten(ctx, t, strategy, ctx.mu);
}

// Coordinates of pi(t) in the basis pi(theta(W)): S(theta(t)).  The input is
// over X; elements over the original basis go through to_x_coordinates first.
inline NormalForm normal_form(const UEAContext& ctx, const TensorElement& t,
                              Strategy strategy = Strategy::leftmost) {
  return straighten(ctx, theta(ctx.xalgebra, t), strategy, ctx.mu);
}

inline NormalForm normal_form(const UEAContext& ctx, const TensorElement& t, Strategy strategy,
                              const Scalar& mu) {
  return straighten(ctx, theta(ctx.xalgebra, t), strategy, mu);
}

// Representative in T(g) of a class: W coordinates lift through theta.
inline TensorElement theta_lift(const UEAContext& ctx, const NormalForm& u) {
  return theta(ctx.xalgebra, u.to_tensor());
}

// Product induced from (.) on the quotient.
inline NormalForm uea_multiply(const UEAContext& ctx, const NormalForm& u, const NormalForm& v,
                               Strategy strategy = Strategy::leftmost) {
  return normal_form(ctx, odot(ctx.xalgebra, theta_lift(ctx, u), theta_lift(ctx, v)), strategy);
}

// The induced twist alpha_U on normal forms; an involution.
inline NormalForm uea_alpha(const UEAContext& ctx, const NormalForm& u,
                            Strategy strategy = Strategy::leftmost) {
  return normal_form(ctx, alpha_T(ctx.xalgebra, theta_lift(ctx, u)), strategy);
}

// psi: g -> U(g) is a morphism of color hom-Lie algebras:
// psi(x)psi(y) - eps(x,y)psi(y)psi(x) = psi([x,y]) and psi o alpha = alpha_U o psi.
inline VerificationReport psi_check(const UEAContext& ctx) {
  VerificationReport report;
  const ColorHomLieAlgebra& X = ctx.xalgebra;
  const std::size_t d = X.dim();
  auto name = [&](std::size_t i) { return X.basis.names[i]; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      TensorElement lhs_t = TensorElement::pure({i, j});
      lhs_t.add(Word({j, i}), -X.eps(i, j));
      NormalForm lhs = normal_form(ctx, lhs_t);
      TensorElement rhs_t;
      for (const auto& [k, c] : X.bracket.at(i, j)) rhs_t.add(Word({k}), c);
      NormalForm rhs = normal_form(ctx, rhs_t);
      if (!(lhs == rhs)) {
        TensorElement defect = lhs.to_tensor() - rhs.to_tensor();
        report.add("psi-bracket", "(" + name(i) + "," + name(j) + ")",
                   format_tensor_element(X.basis, defect));
      }
    }
  for (std::size_t i = 0; i < d; ++i) {
    TensorElement im;  // psi(alpha x_i), a combination of length-1 words
    for (std::size_t r = 0; r < d; ++r)
      if (!X.alpha.at(r, i).is_zero()) im.add(Word({r}), X.alpha.at(r, i));
    NormalForm lhs = normal_form(ctx, im);
    NormalForm rhs = uea_alpha(ctx, normal_form(ctx, TensorElement::pure({i})));
    if (!(lhs == rhs)) {
      TensorElement defect = lhs.to_tensor() - rhs.to_tensor();
      report.add("psi-twist", name(i), format_tensor_element(X.basis, defect));
    }
  }
  return report;
}

// Dense indexing of the monomial basis of T_{<= max_len}.
struct TensorMonomialIndex {
  std::size_t dim, max_len;
  std::vector<std::size_t> offsets;  // offsets[l] = first index of length-l words
  std::size_t total;

  TensorMonomialIndex(std::size_t dim_, std::size_t max_len_) : dim(dim_), max_len(max_len_) {
    offsets.assign(max_len + 1, 0);
    std::size_t acc = 0, p = 1;
    for (std::size_t l = 1; l <= max_len; ++l) {
      if (p > 2000000 / dim) throw ResourceCapError("tensor monomial space too large");
      p *= dim;
      offsets[l] = acc;
      acc += p;
    }
    total = acc;
  }

  std::size_t index(const Word& w) const {
    std::size_t idx = 0;
    for (std::size_t letter : w.letters) idx = idx * dim + letter;
    return offsets[w.length()] + idx;
  }

  SparseRow row(const TensorElement& t) const {
    SparseRow r;
    for (const auto& [w, c] : t.terms) r.emplace_back(index(w), c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  }
};

// Canonical reduced row space of a generator family inside T_{<= max_len};
// two families span the same subspace iff these rows are identical.
inline std::vector<SparseRow> relator_span_rref(const UEAContext& ctx,
                                                const std::vector<TensorElement>& gens,
                                                std::size_t max_len) {
  TensorMonomialIndex idx(ctx.dim(), max_len);
  RowReducer red;
  for (const auto& g : gens) red.add_row(idx.row(g));
  return red.canonical_rows();
}

struct DecompositionReport {
  std::size_t max_len = 0;
  std::size_t tensor_dim = 0;
  std::size_t pbw_count = 0;
  std::size_t relator_rank = 0;
  std::size_t combined_rank = 0;
  VerificationReport checks;

  bool ok() const { return checks.ok(); }
};

// Independent check of T_{<= max_len} = J_mu (+) kW by row reduction alone:
// (a) rank(J_mu) + #W = dim T, (b) the concatenated system [J_mu | W] has
// full rank (zero intersection).  No rewriting is involved.
inline DecompositionReport decomposition_oracle(const UEAContext& ctx, std::size_t max_len,
                                                const Scalar& mu, std::size_t cap = 4) {
  if (max_len > cap)
    throw ResourceCapError("decomposition oracle: max_len " + std::to_string(max_len) +
                           " exceeds the cap " + std::to_string(cap));
  if (max_len < 2) throw std::invalid_argument("decomposition oracle: max_len must be >= 2");
  DecompositionReport rep;
  rep.max_len = max_len;
  TensorMonomialIndex idx(ctx.dim(), max_len);
  rep.tensor_dim = idx.total;

  RowReducer red;
  for (const auto& g : j_mu_generators(ctx, max_len, mu)) red.add_row(idx.row(g));
  rep.relator_rank = red.rank();

  std::size_t wcount = 0;
  std::size_t rejected = 0;
  for (std::size_t l = 1; l <= max_len; ++l)
    for (const auto& w : pbw_words(ctx.dim(), l)) {
      ++wcount;
      if (!red.add_row({{idx.index(w), Scalar(1)}})) ++rejected;
    }
  rep.pbw_count = wcount;
  rep.combined_rank = red.rank();

  if (rep.relator_rank + rep.pbw_count != rep.tensor_dim)
    rep.checks.add("complementarity", "length <= " + std::to_string(max_len),
                   "rank(J) + #W = " + std::to_string(rep.relator_rank) + " + " +
                       std::to_string(rep.pbw_count) +
                       " != dim T = " + std::to_string(rep.tensor_dim));
  if (rejected != 0)
    rep.checks.add("intersection", "length <= " + std::to_string(max_len),
                   std::to_string(rejected) + " basis words already in the relator span");
  return rep;
}

inline DecompositionReport decomposition_oracle(const UEAContext& ctx, std::size_t max_len,
                                                std::size_t cap = 4) {
  return decomposition_oracle(ctx, max_len, ctx.mu, cap);
}

}  // namespace colorpbw
