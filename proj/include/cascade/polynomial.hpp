#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace cascade {

// Complex polynomial in s, coefficients in ascending order of power.
class Polynomial {
 public:
  using cplx = std::complex<double>;

  Polynomial() = default;
  Polynomial(std::initializer_list<cplx> c) : c_(c) { trim(); }
  explicit Polynomial(std::vector<cplx> c) : c_(std::move(c)) { trim(); }
  static Polynomial constant(cplx v) { return Polynomial({v}); }
  static Polynomial from_roots(const std::vector<cplx>& roots);

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<cplx>& coeffs() const { return c_; }
  cplx operator[](int k) const { return k < static_cast<int>(c_.size()) && k >= 0 ? c_[k] : cplx(0.0); }
  cplx leading() const { return c_.empty() ? cplx(0.0) : c_.back(); }

  cplx operator()(cplx s) const;
  Polynomial derivative() const;
  // Coefficients of q(h) = p(a + h).
  Polynomial shifted(cplx a) const;
  Polynomial monic() const;
  double norm() const;  // max |coefficient|
  bool is_real(double rel_tol = 1e-12) const;
  Polynomial pow(int n) const;

  // Roots from the eigenvalues of the companion matrix.
  std::vector<cplx> roots() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(cplx v);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, cplx v) { return a *= v; }
  friend Polynomial operator*(cplx v, Polynomial a) { return a *= v; }
  friend Polynomial operator-(Polynomial a) { return a *= -1.0; }

 private:
  void trim();
  std::vector<cplx> c_;
};

// The monomial s.
inline Polynomial s_poly() { return Polynomial({0.0, 1.0}); }

}  // namespace cascade
