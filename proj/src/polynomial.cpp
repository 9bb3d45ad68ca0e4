#include "cascade/polynomial.hpp"

#include "cascade/errors.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace cascade {

using cplx = std::complex<double>;

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == cplx(0.0)) c_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots) {
  Polynomial p = constant(1.0);
  for (const cplx& r : roots) p = p * Polynomial({-r, 1.0});
  return p;
}

cplx Polynomial::operator()(cplx s) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<cplx> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(static_cast<double>(k) * c_[k]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(cplx a) const {
  // Repeated synthetic division by (s - a).
  std::vector<cplx> b = c_;
  const int n = static_cast<int>(b.size());
  for (int k = 0; k < n; ++k)
    for (int j = n - 2; j >= k; --j) b[j] += a * b[j + 1];
  return Polynomial(std::move(b));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) throw InvalidArgument("monic: zero polynomial");
  Polynomial p = *this;
  p *= 1.0 / leading();
  p.c_.back() = 1.0;
  return p;
}

double Polynomial::norm() const {
  double m = 0.0;
  for (const cplx& v : c_) m = std::max(m, std::abs(v));
  return m;
}

bool Polynomial::is_real(double rel_tol) const {
  const double n = norm();
  for (const cplx& v : c_)
    if (std::abs(v.imag()) > rel_tol * n) return false;
  return true;
}

Polynomial Polynomial::pow(int n) const {
  Polynomial r = constant(1.0);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::vector<cplx> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) C(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) C(k, n - 1) = -c_[k] / leading();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
  std::vector<cplx> r(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0.0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(cplx v) {
  for (cplx& x : c_) x *= v;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> r(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

}  // namespace cascade
