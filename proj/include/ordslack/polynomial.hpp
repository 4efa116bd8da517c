#pragma once

#include <string>
#include <vector>

#include "ordslack/rational.hpp"

namespace ordslack {

// Exponent vector; length always equals the ambient variable count.
struct Monomial {
  std::vector<unsigned> e;

  static Monomial one(int nvars) { return Monomial{std::vector<unsigned>(nvars, 0)}; }
  static Monomial var(int nvars, int i, unsigned power = 1) {
    Monomial m = one(nvars);
    m.e[i] = power;
    return m;
  }

  int nvars() const { return static_cast<int>(e.size()); }
  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial divided_by(const Monomial& m) const;  // requires divisibility
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e == o.e; }
  // storage order (plain lex on exponent vectors), independent of term orders
  bool operator<(const Monomial& o) const { return e < o.e; }
};

struct TermOrder {
  enum Kind { Grevlex, Lex, Block } kind = Grevlex;
  int block = 0;  // Block: the first `block` variables get eliminated

  static TermOrder grevlex() { return {Grevlex, 0}; }
  static TermOrder lex() { return {Lex, 0}; }
  static TermOrder elimination(int first_k) { return {Block, first_k}; }

  bool less(const Monomial& a, const Monomial& b) const;
  bool equal_kind(const TermOrder& o) const { return kind == o.kind && block == o.block; }
  std::string name() const;
};

struct Term {
  Monomial mono;
  Rat coeff;
};

// Sparse multivariate polynomial over Q. Terms are kept merged (no zero
// coefficients, no duplicate monomials) and sorted descending in the storage
// order, so equality is plain vector equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  Polynomial(int nvars, std::vector<Term> terms);

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, Monomial m, const Rat& c = Rat(1));

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  unsigned degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial times_term(const Monomial& m, const Rat& c) const;
  Polynomial scaled(const Rat& c) const;

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Leading term with respect to a term order (largest monomial).
  const Term& leading(const TermOrder& ord) const;
  Polynomial monic(const TermOrder& ord) const;

  Rat eval_ones() const;  // value at the all-ones point = sum of coefficients

  // Extend/contract the ambient ring. shift inserts `count` fresh variables
  // at position 0; unshift drops the first `count` (requires zero exponents
  // there).
  Polynomial shifted(int count) const;
  Polynomial unshifted(int count) const;

  std::string to_string(const std::string& var_prefix = "x") const;

 private:
  int nvars_ = 0;
  std::vector<Term> terms_;
  void normalize();
};

}  // namespace ordslack
