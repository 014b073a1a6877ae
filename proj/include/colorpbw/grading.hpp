#pragma once

// Finite abelian grading groups and commutation factors.
//
// The group is Z_{m1} x ... x Z_{mk}; elements are residue vectors.  A
// commutation factor is a bicharacter eps: Gamma x Gamma -> k\{0} with
// eps(a,b)eps(b,a) = 1; over a finite group its values are roots of unity of
// order dividing exponent(Gamma), so scalars live in Q(zeta_N) with
// N = exponent(Gamma).

#include "report.hpp"
#include "scalar.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace colorpbw {

using Degree = std::vector<int>;

inline std::string degree_str(const Degree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

class GradingGroup {
 public:
  GradingGroup() : moduli_{1} { init(); }
  explicit GradingGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) moduli_ = {1};
    for (int m : moduli_)
      if (m < 1) throw std::invalid_argument("grading modulus must be >= 1");
    init();
  }

  const std::vector<int>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  unsigned exponent() const { return exponent_; }
  std::size_t size() const { return size_; }
  const FieldPtr& field() const { return field_; }

  Degree zero() const { return Degree(moduli_.size(), 0); }

  bool valid(const Degree& d) const {
    if (d.size() != moduli_.size()) return false;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] < 0 || d[i] >= moduli_[i]) return false;
    return true;
  }

  Degree reduce(const Degree& d) const {
    if (d.size() != moduli_.size()) throw std::invalid_argument("degree rank mismatch");
    Degree r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      int m = moduli_[i];
      r[i] = ((d[i] % m) + m) % m;
    }
    return r;
  }

  Degree add(const Degree& a, const Degree& b) const {
    Degree r(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
    return r;
  }

  std::size_t index(const Degree& d) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i)
      idx = idx * static_cast<std::size_t>(moduli_[i]) + static_cast<std::size_t>(d[i]);
    return idx;
  }

  Degree element(std::size_t idx) const {
    Degree d(moduli_.size());
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      d[i] = static_cast<int>(idx % static_cast<std::size_t>(moduli_[i]));
      idx /= static_cast<std::size_t>(moduli_[i]);
    }
    return d;
  }

  friend bool operator==(const GradingGroup& a, const GradingGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  void init() {
    exponent_ = 1;
    size_ = 1;
    for (int m : moduli_) {
      exponent_ = std::lcm(exponent_, static_cast<unsigned>(m));
      size_ *= static_cast<std::size_t>(m);
      if (size_ > 4096) throw std::invalid_argument("grading group too large");
    }
    field_ = CycField::make(exponent_);
  }

  std::vector<int> moduli_;
  unsigned exponent_;
  std::size_t size_;
  FieldPtr field_;
};

// zeta_N^k where N = exponent of the group.
inline Scalar scalar_root_of_unity(const GradingGroup& g, long k) {
  return Scalar::zeta(g.field(), k);
}

class CommutationFactor {
 public:
  CommutationFactor() : table_(1, Scalar(1)) {}  // trivial factor on the trivial group

  // eps(a,b) = zeta_N^{a^T P b}.  Biadditivity over the residue vectors needs
  // (N/m_i) | P_ij and (N/m_j) | P_ij; the pairing axiom eps(a,b)eps(b,a)=1
  // needs P_ij + P_ji = 0 mod N.  Both are checked and rejected up front.
  static CommutationFactor from_pairing(const GradingGroup& g,
                                        const std::vector<std::vector<long>>& pairing) {
    std::size_t k = g.rank();
    if (pairing.size() != k)
      throw std::invalid_argument("pairing matrix must be " + std::to_string(k) + "x" +
                                  std::to_string(k));
    for (const auto& row : pairing)
      if (row.size() != k)
        throw std::invalid_argument("pairing matrix must be square of rank " + std::to_string(k));
    long n = static_cast<long>(g.exponent());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        long ndmi = n / g.moduli()[i];
        long ndmj = n / g.moduli()[j];
        if (pairing[i][j] % ndmi != 0 || pairing[i][j] % ndmj != 0)
          throw std::invalid_argument(
              "invalid bicharacter: pairing entry (" + std::to_string(i) + "," +
              std::to_string(j) + ") = " + std::to_string(pairing[i][j]) +
              " is not biadditive over the moduli");
        if ((pairing[i][j] + pairing[j][i]) % n != 0)
          throw std::invalid_argument(
              "invalid bicharacter: pairing entries (" + std::to_string(i) + "," +
              std::to_string(j) + ") violate eps(a,b)eps(b,a)=1");
      }
    CommutationFactor f;
    f.group_ = g;
    f.pairing_ = pairing;
    f.has_pairing_ = true;
    std::size_t s = g.size();
    std::vector<Scalar> table;
    table.reserve(s * s);
    for (std::size_t ia = 0; ia < s; ++ia) {
      Degree a = g.element(ia);
      for (std::size_t ib = 0; ib < s; ++ib) {
        Degree b = g.element(ib);
        long e = 0;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) e += pairing[i][j] * a[i] * b[j];
        table.push_back(scalar_root_of_unity(g, e));
      }
    }
    f.table_ = std::move(table);
    return f;
  }

  // Free table; caller is expected to run verify_commutation_factor before
  // trusting it.
  static CommutationFactor from_table(const GradingGroup& g, std::vector<Scalar> table) {
    std::size_t s = g.size();
    if (table.size() != s * s)
      throw std::invalid_argument("commutation table must have " + std::to_string(s * s) +
                                  " entries");
    CommutationFactor f;
    f.group_ = g;
    f.table_ = std::move(table);
    return f;
  }

  static CommutationFactor trivial(const GradingGroup& g) {
    std::size_t s = g.size();
    return from_table(g, std::vector<Scalar>(s * s, Scalar(1)));
  }

  const GradingGroup& group() const { return group_; }
  bool has_pairing() const { return has_pairing_; }
  const std::vector<std::vector<long>>& pairing() const { return pairing_; }

  const Scalar& value(const Degree& a, const Degree& b) const {
    return table_[group_.index(a) * group_.size() + group_.index(b)];
  }

  friend bool operator==(const CommutationFactor& a, const CommutationFactor& b) {
    return a.group_ == b.group_ && a.table_ == b.table_;
  }

 private:
  GradingGroup group_;
  std::vector<Scalar> table_;
  std::vector<std::vector<long>> pairing_;
  bool has_pairing_ = false;
};

// Exhaustive check of the three bicharacter axioms plus nonvanishing.
// Violations are data, not errors.
inline VerificationReport verify_commutation_factor(const CommutationFactor& f) {
  VerificationReport report;
  const GradingGroup& g = f.group();
  std::size_t s = g.size();
  for (std::size_t ia = 0; ia < s; ++ia) {
    Degree a = g.element(ia);
    for (std::size_t ib = 0; ib < s; ++ib) {
      Degree b = g.element(ib);
      if (f.value(a, b).is_zero())
        report.add("nonzero", degree_str(a) + "," + degree_str(b), "0");
      Scalar prod = f.value(a, b) * f.value(b, a);
      if (!prod.is_one())
        report.add("axiom(iii)", degree_str(a) + "," + degree_str(b), prod.str());
    }
  }
  for (std::size_t ia = 0; ia < s; ++ia) {
    Degree a = g.element(ia);
    for (std::size_t ib = 0; ib < s; ++ib) {
      Degree b = g.element(ib);
      for (std::size_t ic = 0; ic < s; ++ic) {
        Degree c = g.element(ic);
        Scalar lhs1 = f.value(g.add(a, b), c);
        Scalar rhs1 = f.value(a, c) * f.value(b, c);
        if (lhs1 != rhs1)
          report.add("axiom(i)", degree_str(a) + "+" + degree_str(b) + "," + degree_str(c),
                     (lhs1 - rhs1).str());
        Scalar lhs2 = f.value(a, g.add(c, b));
        Scalar rhs2 = f.value(a, c) * f.value(a, b);
        if (lhs2 != rhs2)
          report.add("axiom(ii)", degree_str(a) + "," + degree_str(c) + "+" + degree_str(b),
                     (lhs2 - rhs2).str());
      }
    }
  }
  return report;
}

}  // namespace colorpbw
