#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cluster_quake/exchange_matrix.hpp"
#include "cluster_quake/matrix.hpp"

namespace cluster_quake {

// Sparse polynomial with integer coefficients in y_0 .. y_{n-1}.
class FPolynomial {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, Int>;

  explicit FPolynomial(std::size_t nvars = 0) : n_(nvars) {}
  FPolynomial(std::size_t nvars, Terms terms);

  static FPolynomial one(std::size_t nvars);
  static FPolynomial constant(std::size_t nvars, Int c);
  static FPolynomial monomial(std::size_t nvars, Exponent exp, Int coef = 1);
  static FPolynomial variable(std::size_t nvars, std::size_t j);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Int coefficient(const Exponent& exp) const;
  Int constant_term() const { return coefficient(Exponent(n_, 0)); }
  int degree_in(std::size_t j) const;
  bool has_positive_coefficients() const;

  FPolynomial operator+(const FPolynomial& other) const;
  FPolynomial operator-(const FPolynomial& other) const;
  FPolynomial operator*(const FPolynomial& other) const;
  FPolynomial pow(unsigned e) const;

  // Exact quotient; throws ConsistencyError when divisor does not divide *this.
  FPolynomial divide_exact(const FPolynomial& divisor) const;

  // Throws DomainError unless every y_j > 0.
  template <class S>
  S evaluate(std::span<const S> y) const;

  // log F(exp(log_y)), computed by log-sum-exp; coefficients must be positive.
  double log_evaluate(std::span<const double> log_y) const;

  std::string to_string() const;

  friend bool operator==(const FPolynomial&, const FPolynomial&) = default;

 private:
  void add_term(const Exponent& exp, Int coef);

  std::size_t n_ = 0;
  Terms terms_;
};

using FTuple = std::vector<FPolynomial>;

FTuple initial_f_tuple(std::size_t n);

// One step of the F-polynomial recursion at a vertex with C-matrix C and exchange matrix eps.
FTuple mutate_F(const FTuple& fs, const IntMatrix& C, const ExchangeMatrix& eps, std::size_t k);

// f_ij = maximal exponent of y_j in F_i.
IntMatrix f_matrix(const FTuple& fs);

template <class S>
S FPolynomial::evaluate(std::span<const S> y) const {
  if (y.size() != n_) throw DomainError("evaluation point has wrong dimension");
  for (const S& v : y)
    if (!(v > S(0))) throw DomainError("F-polynomials are evaluated at positive points only");
  S total(0);
  for (const auto& [exp, coef] : terms_) {
    S term(coef);
    for (std::size_t j = 0; j < n_; ++j)
      for (int e = 0; e < exp[j]; ++e) term *= y[j];
    total += term;
  }
  return total;
}

}  // namespace cluster_quake
