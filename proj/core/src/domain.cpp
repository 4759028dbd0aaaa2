#include "nskernel/domain.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "nskernel/errors.hpp"

namespace nskernel {

std::string to_string(DomainType type) {
  switch (type) {
    case DomainType::Ball: return "ball";
    case DomainType::Polydisc: return "polydisc";
    case DomainType::DiagonalBall: return "diagonal_ball";
    case DomainType::SmoothReinhardt: return "smooth_reinhardt";
  }
  return "unknown";
}

DomainType domain_type_from_string(const std::string& name) {
  if (name == "ball") return DomainType::Ball;
  if (name == "polydisc") return DomainType::Polydisc;
  if (name == "diagonal_ball") return DomainType::DiagonalBall;
  if (name == "smooth_reinhardt") return DomainType::SmoothReinhardt;
  throw ContractViolation("unknown domain type '" + name + "'");
}

RhoPolynomial::RhoPolynomial(int n, std::vector<RhoTerm> terms) : n_(n), terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (static_cast<int>(term.exponents.size()) != n_)
      throw ContractViolation("rho term exponent length does not match dimension");
    for (int e : term.exponents)
      if (e < 0) throw ContractViolation("rho term exponents must be non-negative");
  }
}

namespace {

double monomial(const std::vector<int>& e, const RVector& t, int skip1 = -1, int skip2 = -1) {
  double r = 1.0;
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    int k = e[i];
    double c = 1.0;
    if (i == skip1) { c *= k; --k; }
    if (i == skip2) { c *= k; --k; }
    if (k < 0 || c == 0.0) return 0.0;
    r *= c * std::pow(t[i], k);
  }
  return r;
}

}  // namespace

double RhoPolynomial::value(const RVector& t) const {
  double s = 0.0;
  for (const auto& term : terms_) s += term.coeff * monomial(term.exponents, t);
  return s;
}

RVector RhoPolynomial::gradient(const RVector& t) const {
  RVector g = RVector::Zero(n_);
  for (const auto& term : terms_)
    for (int i = 0; i < n_; ++i) g[i] += term.coeff * monomial(term.exponents, t, i);
  return g;
}

RMatrix RhoPolynomial::hessian(const RVector& t) const {
  RMatrix h = RMatrix::Zero(n_, n_);
  for (const auto& term : terms_)
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) h(i, j) += term.coeff * monomial(term.exponents, t, i, j);
  return h;
}

DomainSpec DomainSpec::ball(int n) {
  if (n < 1) throw ContractViolation("dimension must be >= 1");
  DomainSpec d;
  d.type_ = DomainType::Ball;
  d.n_ = n;
  std::vector<RhoTerm> terms;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    terms.push_back({e, 1.0});
  }
  terms.push_back({std::vector<int>(n, 0), -1.0});
  d.rho_ = RhoPolynomial(n, std::move(terms));
  return d;
}

DomainSpec DomainSpec::polydisc(int n) {
  if (n < 1) throw ContractViolation("dimension must be >= 1");
  DomainSpec d;
  d.type_ = DomainType::Polydisc;
  d.n_ = n;
  return d;
}

DomainSpec DomainSpec::diagonal_ball(std::vector<double> scales) {
  if (scales.empty()) throw ContractViolation("diagonal ball needs at least one scale");
  for (double a : scales)
    if (!(a > 0.0) || !std::isfinite(a)) throw ContractViolation("diagonal ball scales must be positive");
  DomainSpec d;
  d.type_ = DomainType::DiagonalBall;
  d.n_ = static_cast<int>(scales.size());
  std::vector<RhoTerm> terms;
  for (int i = 0; i < d.n_; ++i) {
    std::vector<int> e(d.n_, 0);
    e[i] = 1;
    terms.push_back({e, scales[i]});
  }
  terms.push_back({std::vector<int>(d.n_, 0), -1.0});
  d.scales_ = std::move(scales);
  d.rho_ = RhoPolynomial(d.n_, std::move(terms));
  return d;
}

namespace {

// Points omega on the unit simplex with grid resolution res.
std::vector<RVector> simplex_sample(int n, int res) {
  std::vector<RVector> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      cur[pos] = left;
      RVector w(n);
      for (int i = 0; i < n; ++i) w[i] = static_cast<double>(cur[i]) / res;
      out.push_back(w);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  rec(0, res);
  return out;
}

}  // namespace

DomainSpec DomainSpec::smooth_reinhardt(int n, std::vector<RhoTerm> terms) {
  if (n < 1) throw ContractViolation("dimension must be >= 1");
  if (terms.empty()) throw ContractViolation("rho polynomial has no terms");
  DomainSpec d;
  d.type_ = DomainType::SmoothReinhardt;
  d.n_ = n;
  d.rho_ = RhoPolynomial(n, std::move(terms));
  if (!(d.rho_.value(RVector::Zero(n)) < 0.0))
    throw ContractViolation("smooth Reinhardt domain requires rho(0) < 0");
  for (const RVector& omega : simplex_sample(n, n == 1 ? 1 : 20)) {
    const double lam = d.radial_extent(omega);  // throws if unbounded
    for (int k = 1; k < 200; ++k) {
      const double l = lam * k / 200.0;
      if (!(d.rho_.value(l * omega) < 0.0))
        throw ContractViolation("smooth Reinhardt domain is not star-shaped about 0");
    }
    const double radial = d.rho_.gradient(lam * omega).dot(omega);
    if (!(radial > 0.0))
      throw ContractViolation("defining function gradient degenerates on the boundary");
  }
  return d;
}

double DomainSpec::radial_extent(const RVector& omega) const {
  switch (type_) {
    case DomainType::Ball: return 1.0 / omega.sum();
    case DomainType::Polydisc: return 1.0 / omega.maxCoeff();
    case DomainType::DiagonalBall: {
      double s = 0.0;
      for (int i = 0; i < n_; ++i) s += scales_[i] * omega[i];
      return 1.0 / s;
    }
    case DomainType::SmoothReinhardt: break;
  }
  auto f = [&](double l) { return rho_.value(l * omega); };
  double hi = 1.0 / 1024.0;
  int guard = 0;
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (++guard > 80) throw ContractViolation("smooth Reinhardt domain is unbounded along a ray");
  }
  double lo = guard == 0 ? 0.0 : hi / 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double DomainSpec::gauge(const CPoint& z) const {
  check_dimension(z);
  switch (type_) {
    case DomainType::Ball: return z.norm();
    case DomainType::Polydisc: return z.cwiseAbs().maxCoeff();
    case DomainType::DiagonalBall: {
      double s = 0.0;
      for (int i = 0; i < n_; ++i) s += scales_[i] * std::norm(z[i]);
      return std::sqrt(s);
    }
    case DomainType::SmoothReinhardt: {
      RVector t(n_);
      for (int i = 0; i < n_; ++i) t[i] = std::norm(z[i]);
      const double s = t.sum();
      if (s == 0.0) return 0.0;
      return std::sqrt(s / radial_extent(t / s));
    }
  }
  return 0.0;
}

std::string DomainSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(type_) << "(";
  switch (type_) {
    case DomainType::Ball:
    case DomainType::Polydisc: os << n_; break;
    case DomainType::DiagonalBall:
      for (int i = 0; i < n_; ++i) os << (i ? "," : "") << scales_[i];
      break;
    case DomainType::SmoothReinhardt: {
      os << "n=" << n_ << "; ";
      bool first = true;
      for (const auto& term : rho_.terms()) {
        os << (first ? "" : " + ") << term.coeff;
        for (int i = 0; i < n_; ++i)
          if (term.exponents[i] > 0) os << "*t" << (i + 1) << "^" << term.exponents[i];
        first = false;
      }
      break;
    }
  }
  os << ")";
  return os.str();
}

void DomainSpec::check_dimension(const CPoint& z) const {
  if (z.size() != n_)
    throw ContractViolation("point has dimension " + std::to_string(z.size()) + ", domain has " +
                            std::to_string(n_));
}

bool operator==(const DomainSpec& a, const DomainSpec& b) {
  if (a.type() != b.type() || a.dimension() != b.dimension() || a.scales() != b.scales()) return false;
  const auto& ta = a.rho().terms();
  const auto& tb = b.rho().terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i)
    if (ta[i].exponents != tb[i].exponents || ta[i].coeff != tb[i].coeff) return false;
  return true;
}

}  // namespace nskernel
