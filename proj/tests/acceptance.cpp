// Acceptance suite: one line per criterion, [PASS]/[FAIL], exit code = number
// of failed criteria.  Everything is exact arithmetic at desk scale
// (dim <= 4, word length <= 5); randomized parts are seeded (--seed N).
//
//   1  axiom suite on the bundled fixtures plus six sabotage witnesses
//   2  free-algebra laws: hom-associativity of the twisted product, the
//      involutions, and the four structure identities of the position twist
//   3  the twisted ideal span equals the flat relator span (theta(I) = J)
//   4  decomposition oracle: rank(J) + #W = dim T with zero intersection
//   5  dual-strategy straightening agreement (confluence)
//   6  normal forms kill the ideal and are faithful on the PBW basis
//   7  the canonical map g -> U(g) is a morphism (psi check)
//   8  degenerations: classical PBW oracle; superalgebra preset byte-identity

#include <colorpbw/colorpbw.hpp>

#include "support/classical_pbw.hpp"
#include "support/fixtures.hpp"
#include "support/random_support.hpp"
#include "support/tensor_props.hpp"

#include <cstring>
#include <iostream>
#include <string>
#include <vector>

using namespace colorpbw;

namespace {

std::uint64_t g_seed = 20240815;
int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!pass) ++g_failures;
}

const std::vector<std::string> kCleanFixtures = {
    "abelian1.alg",         "abelian1_neg.alg",
    "abelian2.alg",         "abelian2_neg.alg",
    "abelian3.alg",         "abelian3_twist.alg",
    "heisenberg_super.alg", "heisenberg_super_swap.alg",
    "heisenberg4_mu.alg",   "color4_z2z2.alg",
    "color4_z2z2_twist.alg", "heisenberg_classical.alg",
    "so3.alg",              "color_z3z3.alg",
};

std::vector<std::pair<std::string, UEAContext>> constructible_contexts() {
  std::vector<std::pair<std::string, UEAContext>> out;
  for (const auto& name : kCleanFixtures) {
    try {
      out.emplace_back(name, build_alpha_stable_basis(testsupport::load_fixture(name)));
    } catch (const BasisConstructionError&) {
      // fixtures without a degree-preserving pairing are exercised as errors
    }
  }
  return out;
}

void criterion_1_axioms() {
  std::string detail;
  bool pass = true;
  for (const auto& name : kCleanFixtures) {
    ColorHomLieAlgebra A = testsupport::load_fixture(name);
    VerificationReport r = verify_algebra(A);
    if (!r.ok()) {
      pass = false;
      detail += name + " unexpectedly fails; ";
    }
  }
  struct Sabotage {
    const char* file;
    const char* check;
    const char* witness;
  };
  const Sabotage sabotage[] = {
      {"sabotage/bad_eps.alg", "axiom(iii)", "(1),(1)"},
      {"sabotage/bad_skew.alg", "skew-symmetry", "(x,y)"},
      {"sabotage/bad_jacobi.alg", "hom-jacobi", "(h,e,f)"},
      {"sabotage/bad_grading.alg", "grading", "[x,y] -> x"},
      {"sabotage/bad_alpha_uneven.alg", "alpha-even", "alpha(x) -> z"},
      {"sabotage/bad_involutive.alg", "involutive", "alpha^2(x)"},
  };
  for (const auto& s : sabotage) {
    ColorHomLieAlgebra A = testsupport::load_fixture(s.file);
    VerificationReport r = verify_algebra(A);
    bool found = false;
    for (const auto& v : r.violations)
      if (v.check == s.check && v.witness == s.witness) found = true;
    if (r.ok() || !found) {
      pass = false;
      detail += std::string(s.file) + " missing designated witness; ";
    }
  }
  report(1, "axiom suite with sabotage witnesses", pass,
         pass ? std::to_string(kCleanFixtures.size()) + " fixtures + 6 sabotage" : detail);
}

void criterion_2_free_algebra() {
  testsupport::Rng rng(g_seed);
  bool pass = true;
  std::string detail;
  // hom-associativity of the twisted product: 1000 triples, total length <= 6
  for (int trial = 0; trial < 1000 && pass; ++trial) {
    ColorHomLieAlgebra M = testsupport::random_module(rng, 1 + trial % 3);
    TensorElement x = testsupport::random_tensor_element(rng, M.dim(), 2);
    TensorElement y = testsupport::random_tensor_element(rng, M.dim(), 2);
    TensorElement z = testsupport::random_tensor_element(rng, M.dim(), 2);
    if (!(odot(M, alpha_T(M, x), odot(M, y, z)) == odot(M, odot(M, x, y), alpha_T(M, z)))) {
      pass = false;
      detail = "hom-associativity failed at trial " + std::to_string(trial);
    }
  }
  // involutions and naturality: 500 instances each
  for (int trial = 0; trial < 500 && pass; ++trial) {
    ColorHomLieAlgebra M = testsupport::random_module(rng, 1 + trial % 3);
    TensorElement t = testsupport::random_tensor_element(rng, M.dim(), 5);
    if (!(alpha_T(M, alpha_T(M, t)) == t)) {
      pass = false;
      detail = "alpha_T^2 != id";
    }
    if (!(theta(M, theta(M, t)) == t)) {
      pass = false;
      detail = "theta^2 != id";
    }
    if (!(theta(M, alpha_T(M, t)) == alpha_T(M, theta(M, t)))) {
      pass = false;
      detail = "theta does not commute with alpha_T";
    }
  }
  // closed form of theta
  for (int trial = 0; trial < 500 && pass; ++trial) {
    ColorHomLieAlgebra M = testsupport::random_module(rng, 1 + trial % 3);
    Word u = testsupport::random_word(rng, M.dim(), 1 + trial % 5);
    TensorElement rhs = TensorElement::pure(std::vector<std::size_t>{u.letters[0]});
    for (std::size_t k = 1; k < u.length(); ++k)
      rhs = tensor_concat(rhs, alpha_T_pow(M, TensorElement::pure({u.letters[k]}), k - 1));
    if (!(theta(M, TensorElement::pure(u)) == rhs)) {
      pass = false;
      detail = "theta closed form failed";
    }
  }
  // theta of a concatenation
  for (int trial = 0; trial < 500 && pass; ++trial) {
    ColorHomLieAlgebra M = testsupport::random_module(rng, 1 + trial % 3);
    Word u = testsupport::random_word(rng, M.dim(), 1 + trial % 4);
    Word w = testsupport::random_word(rng, M.dim(), 1 + (trial / 4) % 4);
    TensorElement lhs = theta(M, tensor_concat(TensorElement::pure(u), TensorElement::pure(w)));
    TensorElement rhs = tensor_concat(theta(M, TensorElement::pure(u)),
                                      testsupport::letterwise_powers(M, w, u.length() - 1));
    if (!(lhs == rhs)) {
      pass = false;
      detail = "theta concatenation law failed";
    }
  }
  // the shifted tail factor between lengths k+1 and k
  for (int trial = 0; trial < 500 && pass; ++trial) {
    ColorHomLieAlgebra M = testsupport::random_module(rng, 1 + trial % 3);
    M.alpha = testsupport::random_signed_permutation_even(rng, M.basis.degrees);
    std::size_t k = 1 + trial % 3;
    Word u = testsupport::random_word(rng, M.dim(), k + 1);
    Word v = testsupport::random_word(rng, M.dim(), k);
    Word w = testsupport::random_word(rng, M.dim(), 1 + (trial / 3) % 4);
    TensorElement tu = theta(M, TensorElement::pure(u));
    const auto& [tu_word, tu_coeff] = *tu.terms.begin();
    TensorElement c;
    bool factored = true;
    for (const auto& [full, coeff] :
         theta(M, tensor_concat(TensorElement::pure(u), TensorElement::pure(w))).terms) {
      std::vector<std::size_t> prefix(full.letters.begin(), full.letters.begin() + u.length());
      if (prefix != tu_word.letters) {
        factored = false;
        break;
      }
      std::vector<std::size_t> suffix(full.letters.begin() + u.length(), full.letters.end());
      c.add(Word(std::move(suffix)), coeff / tu_coeff);
    }
    TensorElement lhs = theta(M, tensor_concat(TensorElement::pure(v), TensorElement::pure(w)));
    TensorElement rhs = tensor_concat(theta(M, TensorElement::pure(v)), alpha_T(M, c));
    if (!factored || !(lhs == rhs)) {
      pass = false;
      detail = "tail factor law failed";
    }
  }
  report(2, "free-algebra laws on seeded random instances", pass,
         pass ? "1000 triples + 4x500 identities" : detail);
}

void criterion_3_theta_ideal() {
  bool pass = true;
  std::string detail;
  std::size_t count = 0;
  for (const auto& [name, ctx] : constructible_contexts()) {
    for (std::size_t len = 2; len <= 3; ++len) {
      std::vector<TensorElement> theta_ideal;
      for (const auto& g : ideal_generators(ctx, len))
        theta_ideal.push_back(theta(ctx.xalgebra, g));
      auto lhs = relator_span_rref(ctx, theta_ideal, len);
      auto rhs = relator_span_rref(ctx, j_mu_generators(ctx, len), len);
      if (!(lhs == rhs)) {
        pass = false;
        detail += name + " at length " + std::to_string(len) + "; ";
      }
    }
    ++count;
  }
  report(3, "theta(I) = J as exact subspaces at length <= 3", pass,
         pass ? std::to_string(count) + " constructible fixtures" : detail);
}

void criterion_4_decomposition() {
  bool pass = true;
  std::string detail;
  std::size_t count = 0;
  for (const auto& [name, ctx] : constructible_contexts()) {
    for (std::size_t len = 2; len <= 4; ++len) {
      DecompositionReport rep = decomposition_oracle(ctx, len);
      if (!rep.ok()) {
        pass = false;
        detail += name + " at length " + std::to_string(len) + "; ";
      }
    }
    ++count;
  }
  UEAContext h = build_alpha_stable_basis(testsupport::load_fixture("heisenberg_super.alg"));
  DecompositionReport rep = decomposition_oracle(h, 2);
  if (!(rep.relator_rank == 3 && rep.pbw_count == 9 && rep.tensor_dim == 12)) {
    pass = false;
    detail += "super Heisenberg ranks differ from (3, 9, 12); ";
  }
  report(4, "PBW decomposition oracle at length <= 4", pass,
         pass ? std::to_string(count) + " fixtures, ranks (3,9,12) pinned" : detail);
}

void criterion_5_confluence() {
  bool pass = true;
  std::string detail;
  std::size_t count = 0;
  for (const auto& [name, ctx] : constructible_contexts()) {
    std::size_t mism = confluence_mismatches(ctx, 1000, 5, g_seed + count);
    if (mism != 0) {
      pass = false;
      detail += name + ": " + std::to_string(mism) + " mismatches; ";
    }
    ++count;
  }
  report(5, "leftmost vs rightmost straightening on 1000 words per fixture", pass,
         pass ? std::to_string(count) + " fixtures" : detail);
}

void criterion_6_annihilation_faithfulness() {
  bool pass = true;
  std::string detail;
  std::size_t count = 0;
  for (const auto& [name, ctx] : constructible_contexts()) {
    for (const auto& g : ideal_generators(ctx, 4))
      if (!normal_form(ctx, g).is_zero()) {
        pass = false;
        detail += name + ": generator survives; ";
        break;
      }
    for (std::size_t len = 1; len <= 4 && pass; ++len)
      for (const auto& w : pbw_words(ctx.dim(), len)) {
        NormalForm nf = normal_form(ctx, theta(ctx.xalgebra, TensorElement::pure(w)));
        if (nf.terms.size() != 1 || !(nf.terms.begin()->first == w) ||
            !nf.terms.begin()->second.is_one()) {
          pass = false;
          detail += name + ": basis word not fixed; ";
          break;
        }
      }
    ++count;
  }
  report(6, "ideal annihilation and PBW faithfulness at length <= 4", pass,
         pass ? std::to_string(count) + " fixtures" : detail);
}

void criterion_7_psi() {
  bool pass = true;
  std::string detail;
  std::size_t count = 0;
  for (const auto& [name, ctx] : constructible_contexts()) {
    VerificationReport r = psi_check(ctx);
    if (!r.ok()) {
      pass = false;
      detail += name + "; ";
    }
    ++count;
  }
  report(7, "psi is a morphism into U(g)", pass,
         pass ? std::to_string(count) + " fixtures" : detail);
}

void criterion_8_degenerations() {
  bool pass = true;
  std::string detail;
  // classical PBW straightening oracle at alpha = id, trivial factor
  for (const char* name : {"heisenberg_classical.alg", "so3.alg"}) {
    ColorHomLieAlgebra A = testsupport::load_fixture(name);
    UEAContext ctx = build_alpha_stable_basis(A);
    for (std::size_t len = 1; len <= 3; ++len)
      for (const auto& ls : detail::all_words(A.dim(), len)) {
        TensorElement t = TensorElement::pure(ls);
        if (!(normal_form(ctx, t).terms == testsupport::classical_pbw(A, t))) {
          pass = false;
          detail += std::string(name) + " disagrees with the classical oracle; ";
          len = 5;
          break;
        }
      }
  }
  // the superalgebra preset and the generic Z_2 path produce identical bytes
  AlgebraSpec preset = super_preset({"x", "y", "z"}, {1, 1, 0}, {"x y = z 1", "y x = z 1"}, {});
  AlgebraSpec generic = testsupport::load_spec("heisenberg_super.alg");
  UEAContext pctx = build_alpha_stable_basis(preset.to_algebra());
  UEAContext gctx = build_alpha_stable_basis(generic.to_algebra());
  TensorElement xy = TensorElement::pure({0, 1});
  std::string pout = format_normal_form(pctx, normal_form(pctx, xy), OutputFormat::text);
  std::string gout = format_normal_form(gctx, normal_form(gctx, xy), OutputFormat::text);
  if (pout != gout || print_algebra_spec(preset) != print_algebra_spec(generic)) {
    pass = false;
    detail += "preset and generic outputs differ; ";
  }
  report(8, "classical and superalgebra degenerations", pass,
         pass ? "2 classical fixtures, preset byte-identical" : detail);
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) g_seed = std::stoull(argv[++i]);
  }
  std::cout << "acceptance suite (seed " << g_seed << ")\n";
  criterion_1_axioms();
  criterion_2_free_algebra();
  criterion_3_theta_ideal();
  criterion_4_decomposition();
  criterion_5_confluence();
  criterion_6_annihilation_faithfulness();
  criterion_7_psi();
  criterion_8_degenerations();
  if (g_failures == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << g_failures << " criteria failed\n";
  return g_failures;
}
