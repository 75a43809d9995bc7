#include "cluster_quake/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "cluster_quake/rational.hpp"

namespace cluster_quake {

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = Rational(m(i, j));
  return r;
}

Int to_int_exact(const Rational& q) {
  if (denominator(q) != 1) throw ConsistencyError("expected an integral entry");
  const BigInt& num = numerator(q);
  if (num > std::numeric_limits<Int>::max() || num < std::numeric_limits<Int>::min())
    throw OverflowError("integer entry exceeds 64 bits");
  return num.convert_to<Int>();
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = to_rational(m);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return to_int_exact(det);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!m.square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = to_rational(m);
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) throw ConsistencyError("matrix is singular");
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      std::swap(inv[pivot], inv[c]);
      det = -det;
    }
    const Rational p = a[c][c];
    det *= p;
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  if (det != 1 && det != -1) throw ConsistencyError("matrix is not unimodular");
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = to_int_exact(inv[i][j]);
  return out;
}

std::optional<IntMatrix> conjugate_by_diagonal(const IntMatrix& m, std::span<const Int> d) {
  if (!m.square() || d.size() != m.rows()) throw DomainError("symmetrizer size mismatch");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int scaled = checked::mul(d[i], m(i, j));
      if (scaled % d[j] != 0) return std::nullopt;
      out(i, j) = scaled / d[j];
    }
  return out;
}

RealMatrix to_real(const IntMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<double>(m(i, j));
  return r;
}

double max_abs_difference(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

bool all_nonpositive(const IntMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](Int v) { return v <= 0; });
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      if (digits == "-" || digits == "+" || digits.empty()) throw ParseError("bad number '" + text + "'");
      BigInt den = 1;
      for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
      if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
      return Rational(BigInt(digits), den);
    }
    std::string t = text;
    if (t[0] == '+') t.erase(0, 1);
    return Rational(BigInt(t));
  } catch (const std::runtime_error&) {
    throw ParseError("cannot parse '" + text + "' as a rational number");
  }
}

}  // namespace cluster_quake
