#include "ordslack/polynomial.hpp"

#include <algorithm>

#include "ordslack/error.hpp"

namespace ordslack {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  for (unsigned x : e)
    if (x) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  for (int i = 0; i < nvars(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial r = *this;
  for (int i = 0; i < nvars(); ++i) r.e[i] += m.e[i];
  return r;
}

Monomial Monomial::divided_by(const Monomial& m) const {
  Monomial r = *this;
  for (int i = 0; i < nvars(); ++i) r.e[i] -= m.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  auto grevlex_range = [](const Monomial& x, const Monomial& y, int lo, int hi) {
    unsigned dx = 0, dy = 0;
    for (int i = lo; i < hi; ++i) {
      dx += x.e[i];
      dy += y.e[i];
    }
    if (dx != dy) return dx < dy ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
      if (x.e[i] != y.e[i]) return x.e[i] > y.e[i] ? -1 : 1;
    return 0;
  };
  switch (kind) {
    case Lex: {
      for (int i = 0; i < a.nvars(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
      return false;
    }
    case Grevlex:
      return grevlex_range(a, b, 0, a.nvars()) < 0;
    case Block: {
      int first = grevlex_range(a, b, 0, block);
      if (first != 0) return first < 0;
      return grevlex_range(a, b, block, a.nvars()) < 0;
    }
  }
  return false;
}

std::string TermOrder::name() const {
  switch (kind) {
    case Grevlex:
      return "grevlex";
    case Lex:
      return "lex";
    case Block:
      return "block-elim(" + std::to_string(block) + ")";
  }
  return {};
}

Polynomial::Polynomial(int nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.mono.nvars() != nvars_) throw Error("term has wrong variable count");
  normalize();
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return b.mono < a.mono; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : merged) {
    t.coeff.canonicalize();
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial::one(nvars), c});
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  return monomial(nvars, Monomial::var(nvars, i));
}

Polynomial Polynomial::monomial(int nvars, Monomial m, const Rat& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(nvars_);
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      r.terms_.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
  r.normalize();
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), t.coeff * c});
  r.normalize();
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  return times_term(Monomial::one(nvars_), c);
}

const Term& Polynomial::leading(const TermOrder& ord) const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (ord.less(best->mono, t.mono)) best = &t;
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& ord) const {
  if (is_zero()) return *this;
  Rat lc = leading(ord).coeff;
  return scaled(Rat(1) / lc);
}

Rat Polynomial::eval_ones() const {
  Rat s(0);
  for (const auto& t : terms_) s += t.coeff;
  s.canonicalize();
  return s;
}

Polynomial Polynomial::shifted(int count) const {
  Polynomial r(nvars_ + count);
  for (const auto& t : terms_) {
    Monomial m = Monomial::one(nvars_ + count);
    for (int i = 0; i < nvars_; ++i) m.e[count + i] = t.mono.e[i];
    r.terms_.push_back({std::move(m), t.coeff});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::unshifted(int count) const {
  Polynomial r(nvars_ - count);
  for (const auto& t : terms_) {
    for (int i = 0; i < count; ++i)
      if (t.mono.e[i]) throw Error("unshift would drop a used variable");
    Monomial m = Monomial::one(nvars_ - count);
    for (int i = count; i < nvars_; ++i) m.e[i - count] = t.mono.e[i];
    r.terms_.push_back({std::move(m), t.coeff});
  }
  r.normalize();
  return r;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    Rat c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (k == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (!t.mono.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i + 1);
      if (t.mono.e[i] > 1) mono += "^" + std::to_string(t.mono.e[i]);
    }
    if (mono.empty()) {
      s += ordslack::to_string(c);
    } else {
      if (c != 1) s += ordslack::to_string(c) + "*";
      s += mono;
    }
  }
  return s;
}

}  // namespace ordslack
