#include "cascade/rational.hpp"

#include "cascade/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace cascade {

using cplx = std::complex<double>;

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den, std::string provenance) {
  if (den.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (den.degree() == 0) {
    *this = polynomial(num * (1.0 / den.leading()));
  } else {
    *this = polynomial(num) * inverse(provenance.empty() ? "den" : provenance, den);
  }
  provenance_ = std::move(provenance);
}

RationalFunction RationalFunction::polynomial(const Polynomial& p) {
  RationalFunction r;
  if (!p.is_zero()) r.terms_.push_back({p, {}});
  return r;
}

RationalFunction RationalFunction::inverse(const std::string& name, const Polynomial& f) {
  if (f.degree() < 1) throw InvalidArgument("factor '" + name + "' must have degree >= 1");
  RationalFunction r;
  r.factors_.push_back({name, f.monic()});
  r.terms_.push_back({Polynomial::constant(1.0 / f.leading()), {1}});
  return r;
}

int RationalFunction::intern(const Factor& f) {
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (factors_[k].name != f.name) continue;
    const double scale = std::max(factors_[k].poly.norm(), f.poly.norm());
    if ((factors_[k].poly - f.poly).norm() > 1e-12 * scale)
      throw InvalidArgument("factor '" + f.name + "' used with two different polynomials");
    return static_cast<int>(k);
  }
  factors_.push_back(f);
  for (Term& t : terms_) t.powers.resize(factors_.size(), 0);
  return static_cast<int>(factors_.size()) - 1;
}

void RationalFunction::merge_terms() {
  for (Term& t : terms_) t.powers.resize(factors_.size(), 0);
  std::vector<Term> merged;
  for (Term& t : terms_) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Term& m) { return m.powers == t.powers; });
    if (it == merged.end())
      merged.push_back(std::move(t));
    else
      it->numerator += t.numerator;
  }
  std::erase_if(merged, [](const Term& t) { return t.numerator.is_zero(); });
  terms_ = std::move(merged);
}

int RationalFunction::term_degree(const Term& t) const {
  int d = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) d += t.powers[k] * factors_[k].poly.degree();
  return d;
}

cplx RationalFunction::operator()(cplx s) const {
  std::vector<cplx> fv(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) fv[k] = factors_[k].poly(s);
  cplx acc = 0.0;
  for (const Term& t : terms_) {
    cplx den = 1.0;
    for (std::size_t k = 0; k < factors_.size(); ++k)
      for (int p = 0; p < t.powers[k]; ++p) den *= fv[k];
    acc += t.numerator(s) / den;
  }
  return acc;
}

Polynomial RationalFunction::denominator() const {
  Polynomial d = Polynomial::constant(1.0);
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    int mx = 0;
    for (const Term& t : terms_) mx = std::max(mx, t.powers[k]);
    d = d * factors_[k].poly.pow(mx);
  }
  return d;
}

Polynomial RationalFunction::numerator() const {
  std::vector<int> mx(factors_.size(), 0);
  for (const Term& t : terms_)
    for (std::size_t k = 0; k < factors_.size(); ++k) mx[k] = std::max(mx[k], t.powers[k]);
  Polynomial n;
  for (const Term& t : terms_) {
    Polynomial x = t.numerator;
    for (std::size_t k = 0; k < factors_.size(); ++k) x = x * factors_[k].poly.pow(mx[k] - t.powers[k]);
    n += x;
  }
  return n;
}

bool RationalFunction::is_real(double rel_tol) const {
  for (const Factor& f : factors_)
    if (!f.poly.is_real(rel_tol)) return false;
  for (const Term& t : terms_)
    if (!t.numerator.is_real(rel_tol)) return false;
  return true;
}

bool RationalFunction::strictly_proper() const {
  for (const Term& t : terms_)
    if (t.numerator.degree() >= term_degree(t)) return false;
  return true;
}

cplx RationalFunction::initial_value() const {
  if (!strictly_proper()) throw InvalidArgument("initial_value: function is not strictly proper");
  cplx v = 0.0;
  for (const Term& t : terms_) {
    const int d = term_degree(t);
    if (t.numerator.degree() == d - 1) v += t.numerator.leading();
  }
  return v;
}

RationalFunction RationalFunction::divided_by(const std::string& name, const Polynomial& f) const {
  return *this * inverse(name, f);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  std::vector<int> map(o.factors_.size());
  for (std::size_t k = 0; k < o.factors_.size(); ++k) map[k] = intern(o.factors_[k]);
  for (const Term& t : o.terms_) {
    Term n{t.numerator, std::vector<int>(factors_.size(), 0)};
    for (std::size_t k = 0; k < t.powers.size(); ++k) n.powers[map[k]] += t.powers[k];
    terms_.push_back(std::move(n));
  }
  merge_terms();
  return *this;
}

RationalFunction& RationalFunction::operator*=(cplx v) {
  for (Term& t : terms_) t.numerator *= v;
  merge_terms();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Polynomial& p) {
  for (Term& t : terms_) t.numerator = t.numerator * p;
  merge_terms();
  return *this;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r;
  r.factors_ = a.factors_;
  r.provenance_ = a.provenance_;
  std::vector<int> map(b.factors_.size());
  for (std::size_t k = 0; k < b.factors_.size(); ++k) map[k] = r.intern(b.factors_[k]);
  const std::size_t nf = r.factors_.size();
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      RationalFunction::Term t{ta.numerator * tb.numerator, std::vector<int>(nf, 0)};
      for (std::size_t k = 0; k < ta.powers.size(); ++k) t.powers[k] += ta.powers[k];
      for (std::size_t k = 0; k < tb.powers.size(); ++k) t.powers[map[k]] += tb.powers[k];
      r.terms_.push_back(std::move(t));
    }
  r.merge_terms();
  return r;
}

cplx ExponentialSum::evaluate_complex(double t) const {
  cplx acc = 0.0;
  for (const ExpTerm& e : terms_) acc += e.coef * std::pow(t, e.power) * std::exp(e.rate * t);
  return acc;
}

cplx ExponentialSum::constant_term(double tol) const {
  cplx c = 0.0;
  for (const ExpTerm& e : terms_)
    if (e.power == 0 && std::abs(e.rate) <= tol) c += e.coef;
  return c;
}

double ExponentialSum::max_rate_real(double tol) const {
  double m = -std::numeric_limits<double>::infinity();
  for (const ExpTerm& e : terms_)
    if (std::abs(e.rate) > tol) m = std::max(m, e.rate.real());
  return m;
}

ExponentialSum ExponentialSum::scaled(cplx v) const {
  ExponentialSum r = *this;
  for (ExpTerm& e : r.terms_) e.coef *= v;
  return r;
}

namespace {

constexpr double kMergeTol = 1e-8;
constexpr double kAmbiguousTol = 1e-6;
constexpr double kFactorMergeTol = 1e-4;

double relative_distance(cplx a, cplx b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Truncated power series in h.
using Series = std::vector<cplx>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n, 0.0);
  for (std::size_t i = 0; i < std::min(n, a.size()); ++i)
    for (std::size_t j = 0; j + i < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

ExponentialSum invert_rational(const RationalFunction& rf) {
  if (!rf.strictly_proper()) throw InvalidArgument("invert_rational: function is not strictly proper");
  const auto& factors = rf.factors();
  const auto& terms = rf.terms();

  // A root of multiplicity m inside one factor comes back from the eigensolver
  // split by about eps^(1/m); the centroid of the split cluster is accurate.
  struct Root {
    cplx value;
    int factor;
    int count;
  };
  std::vector<Root> roots;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    bool used = std::any_of(terms.begin(), terms.end(), [&](const auto& t) { return t.powers[k] > 0; });
    if (!used) continue;
    std::vector<cplx> raw = factors[k].poly.roots();
    std::vector<bool> taken(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (taken[i]) continue;
      cplx sum = raw[i];
      int count = 1;
      for (std::size_t j = i + 1; j < raw.size(); ++j)
        if (!taken[j] && relative_distance(raw[i], raw[j]) <= kFactorMergeTol) {
          taken[j] = true;
          sum += raw[j];
          ++count;
        }
      roots.push_back({sum / static_cast<double>(count), static_cast<int>(k), count});
    }
  }

  // Union-find clustering of nearly coincident poles.
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = relative_distance(roots[i].value, roots[j].value);
      if (d <= kMergeTol)
        parent[find(i)] = find(j);
      else if (d <= kAmbiguousTol)
        throw IllConditionedPoles("poles " + std::to_string(roots[i].value.real()) + "+" +
                                  std::to_string(roots[i].value.imag()) + "i and its neighbour differ by " +
                                  std::to_string(d) + " relative: multiplicity is ambiguous");
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);

  struct Cluster {
    cplx center;
    std::vector<std::size_t> members;
  };
  std::vector<Cluster> clusters;
  for (auto& [root, members] : groups) {
    cplx c = 0.0;
    int total = 0;
    for (std::size_t m : members) {
      c += roots[m].value * static_cast<double>(roots[m].count);
      total += roots[m].count;
    }
    clusters.push_back({c / static_cast<double>(total), members});
  }
  const std::size_t nc = clusters.size();

  // coefficient of t^q e^{p_c t}, keyed by (cluster, q)
  std::map<std::pair<std::size_t, int>, cplx> acc;
  for (const auto& term : terms) {
    std::vector<int> mult(nc, 0);
    for (std::size_t c = 0; c < nc; ++c)
      for (std::size_t m : clusters[c].members) mult[c] += term.powers[roots[m].factor] * roots[m].count;

    for (std::size_t c = 0; c < nc; ++c) {
      const int m = mult[c];
      if (m == 0) continue;
      const cplx p = clusters[c].center;
      const std::size_t len = static_cast<std::size_t>(m);
      const Polynomial shifted = term.numerator.shifted(p);
      Series g(len, 0.0);
      for (std::size_t k = 0; k < len; ++k) g[k] = shifted[static_cast<int>(k)];
      for (std::size_t o = 0; o < nc; ++o) {
        if (o == c || mult[o] == 0) continue;
        // (d + h)^{-1} = sum_k (-1)^k h^k / d^{k+1}
        const cplx d = p - clusters[o].center;
        Series inv(len);
        cplx dk = 1.0 / d;
        for (std::size_t k = 0; k < len; ++k) {
          inv[k] = (k % 2 == 0 ? 1.0 : -1.0) * dk;
          dk /= d;
        }
        for (int e = 0; e < mult[o]; ++e) g = series_mul(g, inv, len);
      }
      double fact = 1.0;
      for (int q = 0; q < m; ++q) {
        if (q > 0) fact *= q;
        acc[{c, q}] += g[static_cast<std::size_t>(m - 1 - q)] / fact;
      }
    }
  }

  std::vector<cplx> rate(nc);
  for (std::size_t c = 0; c < nc; ++c) rate[c] = clusters[c].center;

  if (rf.is_real()) {
    std::vector<bool> done(nc, false);
    for (std::size_t c = 0; c < nc; ++c) {
      if (done[c]) continue;
      const cplx p = clusters[c].center;
      if (std::abs(p.imag()) <= kMergeTol * std::abs(p)) {
        rate[c] = p.real();
        for (auto& [key, v] : acc)
          if (key.first == c) v = v.real();
        done[c] = true;
        continue;
      }
      std::size_t best = nc;
      double best_d = kAmbiguousTol;
      for (std::size_t o = 0; o < nc; ++o) {
        if (o == c || done[o]) continue;
        const double d = relative_distance(clusters[o].center, std::conj(p));
        if (d <= best_d) {
          best_d = d;
          best = o;
        }
      }
      done[c] = true;
      if (best == nc) continue;
      done[best] = true;
      const cplx pc = 0.5 * (p + std::conj(clusters[best].center));
      rate[c] = pc;
      rate[best] = std::conj(pc);
      for (int q = 0;; ++q) {
        auto a = acc.find({c, q});
        auto b = acc.find({best, q});
        if (a == acc.end() && b == acc.end()) break;
        const cplx va = a == acc.end() ? 0.0 : a->second;
        const cplx vb = b == acc.end() ? 0.0 : b->second;
        const cplx avg = 0.5 * (va + std::conj(vb));
        acc[{c, q}] = avg;
        acc[{best, q}] = std::conj(avg);
      }
    }
  }

  ExponentialSum es;
  for (const auto& [key, v] : acc)
    if (v != cplx(0.0)) es.add({v, rate[key.first], key.second});
  return es;
}

}  // namespace cascade
