#include "cluster_quake/fpolynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cluster_quake {

FPolynomial::FPolynomial(std::size_t nvars, Terms terms) : n_(nvars) {
  for (const auto& [exp, coef] : terms) add_term(exp, coef);
}

FPolynomial FPolynomial::one(std::size_t nvars) { return constant(nvars, 1); }

FPolynomial FPolynomial::constant(std::size_t nvars, Int c) {
  return monomial(nvars, Exponent(nvars, 0), c);
}

FPolynomial FPolynomial::monomial(std::size_t nvars, Exponent exp, Int coef) {
  FPolynomial p(nvars);
  p.add_term(exp, coef);
  return p;
}

FPolynomial FPolynomial::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw IndexError("variable index out of range");
  Exponent e(nvars, 0);
  e[j] = 1;
  return monomial(nvars, std::move(e));
}

void FPolynomial::add_term(const Exponent& exp, Int coef) {
  if (exp.size() != n_) throw DomainError("exponent vector has wrong length");
  for (int e : exp)
    if (e < 0) throw DomainError("negative exponent in polynomial");
  if (coef == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, coef);
    return;
  }
  it->second = checked::add(it->second, coef);
  if (it->second == 0) terms_.erase(it);
}

bool FPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](int e) { return e == 0; });
}

Int FPolynomial::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int FPolynomial::degree_in(std::size_t j) const {
  if (j >= n_) throw IndexError("variable index out of range");
  int d = 0;
  for (const auto& [exp, coef] : terms_) d = std::max(d, exp[j]);
  return d;
}

bool FPolynomial::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

FPolynomial FPolynomial::operator+(const FPolynomial& other) const {
  if (other.n_ != n_) throw DomainError("polynomials in different variable sets");
  FPolynomial r = *this;
  for (const auto& [exp, coef] : other.terms_) r.add_term(exp, coef);
  return r;
}

FPolynomial FPolynomial::operator-(const FPolynomial& other) const {
  if (other.n_ != n_) throw DomainError("polynomials in different variable sets");
  FPolynomial r = *this;
  for (const auto& [exp, coef] : other.terms_) r.add_term(exp, checked::mul(coef, -1));
  return r;
}

FPolynomial FPolynomial::operator*(const FPolynomial& other) const {
  if (other.n_ != n_) throw DomainError("polynomials in different variable sets");
  FPolynomial r(n_);
  Exponent e(n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t j = 0; j < n_; ++j) e[j] = ea[j] + eb[j];
      r.add_term(e, checked::mul(ca, cb));
    }
  return r;
}

FPolynomial FPolynomial::pow(unsigned e) const {
  FPolynomial result = one(n_);
  FPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

FPolynomial FPolynomial::divide_exact(const FPolynomial& divisor) const {
  if (divisor.n_ != n_) throw DomainError("polynomials in different variable sets");
  if (divisor.is_zero()) throw ConsistencyError("division by the zero polynomial");
  const auto& [lead_exp, lead_coef] = *divisor.terms_.rbegin();
  FPolynomial quotient(n_);
  FPolynomial remainder = *this;
  Exponent e(n_);
  while (!remainder.is_zero()) {
    const auto& [rexp, rcoef] = *remainder.terms_.rbegin();
    for (std::size_t j = 0; j < n_; ++j) {
      e[j] = rexp[j] - lead_exp[j];
      if (e[j] < 0) throw ConsistencyError("inexact polynomial division");
    }
    if (rcoef % lead_coef != 0) throw ConsistencyError("inexact polynomial division");
    const FPolynomial step = monomial(n_, e, rcoef / lead_coef);
    quotient.add_term(e, rcoef / lead_coef);
    remainder = remainder - step * divisor;
  }
  return quotient;
}

double FPolynomial::log_evaluate(std::span<const double> log_y) const {
  if (log_y.size() != n_) throw DomainError("evaluation point has wrong dimension");
  if (terms_.empty()) throw DomainError("log of the zero polynomial");
  std::vector<double> logs;
  logs.reserve(terms_.size());
  for (const auto& [exp, coef] : terms_) {
    if (coef <= 0) throw DomainError("log-evaluation needs positive coefficients");
    double s = std::log(static_cast<double>(coef));
    for (std::size_t j = 0; j < n_; ++j) s += exp[j] * log_y[j];
    logs.push_back(s);
  }
  const double m = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - m);
  return m + std::log(acc);
}

std::string FPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coef] : terms_) {
    if (!first) os << (coef < 0 ? " - " : " + ");
    else if (coef < 0) os << "-";
    first = false;
    const Int a = coef < 0 ? -coef : coef;
    bool constant = std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    if (a != 1 || constant) os << a;
    bool need_sep = a != 1;
    for (std::size_t j = 0; j < n_; ++j) {
      if (exp[j] == 0) continue;
      if (need_sep) os << "*";
      os << "y" << j;
      if (exp[j] > 1) os << "^" << exp[j];
      need_sep = true;
    }
  }
  return os.str();
}

FTuple initial_f_tuple(std::size_t n) { return FTuple(n, FPolynomial::one(n)); }

FTuple mutate_F(const FTuple& fs, const IntMatrix& C, const ExchangeMatrix& eps, std::size_t k) {
  const std::size_t n = eps.size();
  if (k >= n) throw IndexError("mutation direction out of range");
  if (fs.size() != n || C.rows() != n || C.cols() != n) throw DomainError("F-tuple, C and eps sizes differ");

  FPolynomial::Exponent plus(n, 0), minus(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const Int c = C(k, j);
    if (c > 0) plus[j] = static_cast<int>(c);
    if (c < 0) minus[j] = static_cast<int>(-c);
  }
  FPolynomial t1 = FPolynomial::monomial(n, plus);
  FPolynomial t2 = FPolynomial::monomial(n, minus);
  for (std::size_t l = 0; l < n; ++l) {
    const Int e = eps(k, l);
    if (e > 0) t1 = t1 * fs[l].pow(static_cast<unsigned>(e));
    if (e < 0) t2 = t2 * fs[l].pow(static_cast<unsigned>(-e));
  }
  FTuple out = fs;
  out[k] = (t1 + t2).divide_exact(fs[k]);
  if (out[k].constant_term() != 1) throw ConsistencyError("F-polynomial with constant term other than 1");
  return out;
}

IntMatrix f_matrix(const FTuple& fs) {
  const std::size_t n = fs.size();
  IntMatrix f(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i].nvars() != n) throw DomainError("F-polynomial in wrong number of variables");
    for (std::size_t j = 0; j < n; ++j) f(i, j) = fs[i].degree_in(j);
  }
  return f;
}

}  // namespace cluster_quake
