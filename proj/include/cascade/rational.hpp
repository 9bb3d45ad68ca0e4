#pragma once

#include "cascade/polynomial.hpp"

#include <string>
#include <vector>

namespace cascade {

// A sum of terms N_k(s) / prod_i f_i(s)^{p_ki} over a shared table of named,
// monic denominator factors. Keeping the factors symbolic avoids expanding
// large common denominators and gives exact multiplicities for repeated
// factors.
class RationalFunction {
 public:
  using cplx = std::complex<double>;

  struct Factor {
    std::string name;
    Polynomial poly;  // monic
  };
  struct Term {
    Polynomial numerator;
    std::vector<int> powers;  // one entry per factor
  };

  RationalFunction() = default;
  // num / den with den stored as a single factor named after the provenance.
  RationalFunction(const Polynomial& num, const Polynomial& den, std::string provenance = "");

  static RationalFunction polynomial(const Polynomial& p);
  static RationalFunction constant(cplx v) { return polynomial(Polynomial::constant(v)); }
  // 1 / f(s). Factors with the same name must carry the same polynomial.
  static RationalFunction inverse(const std::string& name, const Polynomial& f);

  cplx operator()(cplx s) const;

  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::string& provenance() const { return provenance_; }
  RationalFunction& set_provenance(std::string p) {
    provenance_ = std::move(p);
    return *this;
  }

  // Single-fraction view over the least common denominator of the factors.
  Polynomial numerator() const;
  Polynomial denominator() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_real(double rel_tol = 1e-12) const;
  // Every term has numerator degree below its denominator degree.
  bool strictly_proper() const;
  // lim s -> infinity of s F(s); requires strict properness.
  cplx initial_value() const;

  RationalFunction divided_by(const std::string& name, const Polynomial& f) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator*=(cplx v);
  RationalFunction& operator*=(const Polynomial& p);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
    RationalFunction nb = b;
    nb *= -1.0;
    return a += nb;
  }
  friend RationalFunction operator-(RationalFunction a) { return a *= -1.0; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(RationalFunction a, cplx v) { return a *= v; }
  friend RationalFunction operator*(cplx v, RationalFunction a) { return a *= v; }
  friend RationalFunction operator*(RationalFunction a, const Polynomial& p) { return a *= p; }
  friend RationalFunction operator*(const Polynomial& p, RationalFunction a) { return a *= p; }

 private:
  // Index of the factor in this function's table, adding it if needed.
  int intern(const Factor& f);
  void merge_terms();
  int term_degree(const Term& t) const;

  std::vector<Factor> factors_;
  std::vector<Term> terms_;
  std::string provenance_;
};

struct ExpTerm {
  std::complex<double> coef;
  std::complex<double> rate;
  int power = 0;  // coef * t^power * exp(rate t)
};

class ExponentialSum {
 public:
  ExponentialSum() = default;
  explicit ExponentialSum(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {}

  const std::vector<ExpTerm>& terms() const { return terms_; }
  std::complex<double> evaluate_complex(double t) const;
  double operator()(double t) const { return evaluate_complex(t).real(); }

  // Sum of the power-0 coefficients with zero rate: the t -> infinity value
  // when every other rate has negative real part.
  std::complex<double> constant_term(double tol = 1e-10) const;
  double max_rate_real(double tol = 1e-10) const;  // over non-constant terms

  ExponentialSum scaled(std::complex<double> v) const;
  ExponentialSum& add(const ExpTerm& t) {
    terms_.push_back(t);
    return *this;
  }

 private:
  std::vector<ExpTerm> terms_;
};

// Partial-fraction inversion. Poles come from companion-matrix eigenvalues of
// each factor; roots of one factor within 1e-4 relative distance are read as
// a multiple root. Across factors, poles within 1e-8 merge into one pole of the
// summed multiplicity, and any pair in the ambiguous band (1e-8, 1e-6] raises
// IllConditionedPoles. Real functions give conjugate-paired output.
ExponentialSum invert_rational(const RationalFunction& rf);

}  // namespace cascade
