#include "ghostchar/upoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ghostchar {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  for (const auto& z : coeffs) c.emplace_back(z);
  return UPoly(std::move(c));
}

UPoly UPoly::monomial(const Rational& c, int deg) {
  std::vector<Rational> v(static_cast<std::size_t>(deg) + 1, Rational(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigComplex UPoly::operator()(const BigComplex& x) const {
  BigComplex acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigComplex(*it);
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (c_.empty()) return *this;
  std::vector<Rational> v = c_;
  Rational lc = v.back();
  for (auto& x : v) x /= lc;
  return UPoly(std::move(v));
}

std::vector<Integer> UPoly::primitive() const {
  if (c_.empty()) return {};
  Integer den = 1, num = 0;
  for (const auto& q : c_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
  }
  std::vector<Integer> out;
  for (const auto& q : c_) {
    Rational scaled = q * Rational(den, num);
    out.push_back(scaled.get_num());
  }
  if (out.back() < 0)
    for (auto& z : out) z = -z;
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  std::vector<Rational> quo(std::max(0, a.degree() - db + 1), Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[k] / b.c_.back();
    if (sgn(c) == 0) continue;
    quo[k - db] = c;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.c_[j];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? UPoly() : UPoly::from_integers(r.primitive());
  }
  return a.monic();
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 0) return *this;
  UPoly g = gcd(*this, derivative());
  UPoly q, r;
  divmod(*this, g, q, r);
  return UPoly::from_integers(q.primitive());
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

namespace {

Real eps() {
  Real two = 2;
  return boost::multiprecision::pow(two, -static_cast<int>(working_precision()) + 4);
}

// Magnitude bound used for the evaluation round-off term.
Real abs_eval(const std::vector<Real>& absc, const Real& r) {
  Real acc = 0;
  for (auto it = absc.rbegin(); it != absc.rend(); ++it) acc = acc * r + *it;
  return acc;
}

}  // namespace

std::vector<IsolatedRoot> isolate_roots(const UPoly& p) {
  const int d = p.degree();
  if (d < 1) return {};
  if (d == 1) {
    Rational r = -p.coefficients()[0] / p.coefficients()[1];
    return {IsolatedRoot{BigComplex(r), Real(0), true}};
  }
  UPoly dp = p.derivative();
  std::vector<BigComplex> coeff;
  std::vector<Real> absc;
  for (const auto& c : p.coefficients()) {
    coeff.emplace_back(c);
    absc.push_back(boost::multiprecision::abs(to_real(c)));
  }
  auto eval = [&](const BigComplex& z, BigComplex& v, BigComplex& dv) {
    v = BigComplex();
    dv = BigComplex();
    for (int k = d; k >= 0; --k) {
      dv = dv * z + v;
      v = v * z + coeff[k];
    }
  };

  Real bound = 0;
  for (int k = 0; k < d; ++k) bound = std::max<Real>(bound, absc[k] / absc[d]);
  bound += 1;
  std::vector<BigComplex> z(d);
  const Real pi = boost::multiprecision::atan(Real(1)) * 4;
  for (int k = 0; k < d; ++k) {
    Real angle = 2 * pi * k / d + Real(0.4);
    Real rad = bound * (Real(0.5) + Real(k % 3) / 7);
    z[k] = BigComplex(rad * boost::multiprecision::cos(angle), rad * boost::multiprecision::sin(angle));
  }

  const Real tiny = eps() * 16;
  int settled = 0;
  for (int iter = 0; iter < 2000 && settled < 3; ++iter) {
    Real worst = 0;
    for (int k = 0; k < d; ++k) {
      BigComplex v, dv;
      eval(z[k], v, dv);
      if (v.norm() == 0) continue;
      BigComplex w = v / dv;
      BigComplex s;
      for (int j = 0; j < d; ++j)
        if (j != k) s += BigComplex(Real(1)) / (z[k] - z[j]);
      BigComplex step = w / (BigComplex(Real(1)) - w * s);
      z[k] -= step;
      Real rel = abs(step) / (abs(z[k]) + 1);
      worst = std::max<Real>(worst, rel);
    }
    if (worst < tiny) ++settled;
  }

  std::vector<IsolatedRoot> out(d);
  for (int k = 0; k < d; ++k) {
    BigComplex v, dv;
    eval(z[k], v, dv);
    BigComplex prod = coeff[d];
    for (int j = 0; j < d; ++j)
      if (j != k) prod *= z[k] - z[j];
    Real err = abs(v) + eps() * abs_eval(absc, abs(z[k])) * (d + 1);
    out[k].center = z[k];
    out[k].radius = Real(d) * err / abs(prod) * Real(1.0001);
  }
  for (int k = 0; k < d; ++k)
    for (int j = k + 1; j < d; ++j)
      if (abs(out[k].center - out[j].center) <= out[k].radius + out[j].radius)
        throw std::runtime_error("root isolation failed: inclusion disks overlap");
  for (int k = 0; k < d; ++k) {
    BigComplex mirror = out[k].center.conj();
    bool alone = true;
    for (int j = 0; j < d && alone; ++j)
      if (j != k && abs(mirror - out[j].center) <= out[k].radius + out[j].radius) alone = false;
    if (alone && boost::multiprecision::abs(out[k].center.im) <= out[k].radius) {
      out[k].real = true;
      out[k].center.im = 0;
    }
  }
  return out;
}

namespace {

bool near_integer(const Real& x, Integer& out) {
  Real r = boost::multiprecision::round(x);
  if (boost::multiprecision::abs(x - r) > zero_threshold() * (boost::multiprecision::abs(x) + 1))
    return false;
  out = round_to_integer(r);
  return true;
}

bool exact_divisor(const UPoly& p, const UPoly& g, UPoly& quotient) {
  UPoly r;
  UPoly::divmod(p, g, quotient, r);
  return r.is_zero();
}

template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Factor> factor_squarefree(const UPoly& input) {
  std::vector<Factor> out;
  if (input.degree() < 1) return out;
  UPoly p = UPoly::from_integers(input.primitive());
  std::vector<IsolatedRoot> roots = isolate_roots(p);

  // Rational roots have denominators dividing the leading coefficient.
  const Integer lc = p.primitive().back();
  for (std::size_t k = 0; k < roots.size();) {
    if (!roots[k].real) {
      ++k;
      continue;
    }
    Real scaled = roots[k].center.re * to_real(lc);
    Integer num = round_to_integer(scaled);
    Rational cand(num, lc);
    cand.canonicalize();
    // The candidate must be this disk's root, not another root of p.
    if (abs(BigComplex(cand) - roots[k].center) <= roots[k].radius && sgn(p(cand)) == 0) {
      UPoly lin = UPoly::from_integers({-cand.get_num(), cand.get_den()});
      UPoly q;
      exact_divisor(p, lin, q);
      p = UPoly::from_integers(q.primitive());
      out.push_back({lin, {IsolatedRoot{BigComplex(cand), Real(0), true}}, true});
      roots.erase(roots.begin() + static_cast<long>(k));
    } else {
      ++k;
    }
  }

  for (std::size_t size = 2; size <= 4; ++size) {
    bool found = true;
    while (found && roots.size() >= size) {
      found = false;
      if (roots.size() == size) {
        // The whole remainder; irreducible since no smaller factor divides it.
        out.push_back({p, roots, true});
        roots.clear();
        break;
      }
      const Real lcr = to_real(p.primitive().back());
      found = for_each_subset(roots.size(), size, [&](const std::vector<std::size_t>& idx) {
        std::vector<BigComplex> poly{BigComplex(lcr)};
        for (std::size_t i : idx) {
          std::vector<BigComplex> next(poly.size() + 1);
          for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * roots[i].center;
          }
          poly = std::move(next);
        }
        std::vector<Integer> ints;
        for (const auto& c : poly) {
          if (boost::multiprecision::abs(c.im) > zero_threshold() * (abs(c) + 1)) return false;
          Integer z;
          if (!near_integer(c.re, z)) return false;
          ints.push_back(z);
        }
        UPoly g = UPoly::from_integers(UPoly::from_integers(ints).primitive());
        UPoly q;
        if (!exact_divisor(p, g, q)) return false;
        std::vector<IsolatedRoot> mine;
        for (std::size_t i : idx) mine.push_back(roots[i]);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it)
          roots.erase(roots.begin() + static_cast<long>(*it));
        out.push_back({g, mine, true});
        p = UPoly::from_integers(q.primitive());
        return true;
      });
    }
  }
  // Without factors of degree <= 4, a remainder of degree < 10 is irreducible.
  if (!roots.empty()) out.push_back({p, roots, roots.size() < 10});
  return out;
}

}  // namespace ghostchar
