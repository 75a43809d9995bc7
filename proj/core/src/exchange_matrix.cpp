#include "cluster_quake/exchange_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>

#include "cluster_quake/rational.hpp"

namespace cluster_quake {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || hit[v]) throw DomainError("not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw IndexError("transposition index out of range");
  auto p = identity(n).image_;
  std::swap(p[a], p[b]);
  return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

IntMatrix permute_rows(const IntMatrix& m, const Permutation& sigma) {
  if (sigma.size() != m.rows()) throw DomainError("permutation size mismatch");
  const Permutation inv = sigma.inverse();
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) out.set_row(i, m.row_span(inv(i)));
  return out;
}

std::vector<Int> compute_symmetrizer(const IntMatrix& eps) {
  if (!eps.square() || eps.rows() == 0) throw DomainError("exchange matrix must be square and non-empty");
  const std::size_t n = eps.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (eps(i, i) != 0) throw SymmetrizerMismatchError("nonzero diagonal entry");
    for (std::size_t j = 0; j < n; ++j)
      if (sign_of(eps(i, j)) != -sign_of(eps(j, i)))
        throw SymmetrizerMismatchError("matrix is not sign-skew-symmetric");
  }

  std::vector<Rational> d(n, Rational(0));
  std::vector<Int> result(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root] != 0) continue;
    std::vector<std::size_t> component;
    std::queue<std::size_t> queue;
    d[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop();
      component.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (eps(i, j) == 0) continue;
        // eps_ij d_j = -eps_ji d_i
        const Rational want = -Rational(eps(j, i)) * d[i] / Rational(eps(i, j));
        if (d[j] == 0) {
          d[j] = want;
          queue.push(j);
        } else if (d[j] != want) {
          throw SymmetrizerMismatchError("matrix is not skew-symmetrizable");
        }
      }
    }
    BigInt lcm_den = 1;
    for (std::size_t i : component) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(d[i]));
    BigInt g = 0;
    for (std::size_t i : component) g = boost::multiprecision::gcd(g, numerator(d[i] * Rational(lcm_den)));
    for (std::size_t i : component) {
      const BigInt v = numerator(d[i] * Rational(lcm_den)) / g;
      result[i] = v.convert_to<Int>();
    }
  }
  return result;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  d_ = compute_symmetrizer(entries_);
}

ExchangeMatrix::ExchangeMatrix(IntMatrix entries, std::vector<Int> symmetrizer)
    : entries_(std::move(entries)), d_(std::move(symmetrizer)) {
  if (!entries_.square() || d_.size() != entries_.rows()) throw DomainError("symmetrizer size mismatch");
  for (Int v : d_)
    if (v < 1) throw SymmetrizerMismatchError("symmetrizer entries must be positive");
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (checked::mul(entries_(i, j), d_[j]) != -checked::mul(entries_(j, i), d_[i]))
        throw SymmetrizerMismatchError("symmetrizer does not skew-symmetrize the matrix");
}

ExchangeMatrix ExchangeMatrix::mutate(std::size_t k) const {
  const std::size_t n = size();
  if (k >= n) throw IndexError("mutation direction out of range");
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Int e = entries_(i, j);
      if (i == k || j == k) {
        out(i, j) = -e;
      } else {
        const Int a = entries_(i, k);
        const Int b = entries_(k, j);
        const Int sum = checked::add(checked::mul(std::abs(a), b), checked::mul(a, std::abs(b)));
        out(i, j) = checked::add(e, sum / 2);
      }
    }
  ExchangeMatrix result = *this;
  result.entries_ = std::move(out);
  return result;
}

ExchangeMatrix ExchangeMatrix::relabel(const Permutation& sigma) const {
  if (sigma.size() != size()) throw DomainError("permutation size mismatch");
  const Permutation inv = sigma.inverse();
  for (std::size_t i = 0; i < size(); ++i)
    if (d_[inv(i)] != d_[i]) throw SymmetrizerMismatchError("permutation does not preserve the symmetrizer");
  IntMatrix out(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out(i, j) = entries_(inv(i), inv(j));
  ExchangeMatrix result = *this;
  result.entries_ = std::move(out);
  return result;
}

ExchangeMatrix ExchangeMatrix::negated() const {
  ExchangeMatrix result = *this;
  result.entries_ = -entries_;
  return result;
}

ExchangeMatrix ExchangeMatrix::submatrix(const std::vector<std::size_t>& indices) const {
  IntMatrix out(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) {
      if (indices[a] >= size() || indices[b] >= size()) throw IndexError("submatrix index out of range");
      out(a, b) = entries_(indices[a], indices[b]);
    }
  return ExchangeMatrix(std::move(out));
}

std::vector<std::pair<std::size_t, std::size_t>> ExchangeMatrix::admissible_transpositions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (d_[a] == d_[b]) out.emplace_back(a, b);
  return out;
}

// ---------------------------------------------------------------------------
// Dynkin types

std::string DynkinType::label() const {
  static constexpr const char* letters = "ABCDEFG";
  if (family == DynkinFamily::A1xA1) return "A1xA1";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

DynkinType parse_dynkin_type(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (t == "A1XA1" || t == "A1*A1") return {DynkinFamily::A1xA1, 2};
  if (t.size() < 2) throw InvalidTypeError("unknown Dynkin type '" + text + "'");
  const std::string letters = "ABCDEFG";
  const auto pos = letters.find(t[0]);
  if (pos == std::string::npos) throw InvalidTypeError("unknown Dynkin family in '" + text + "'");
  int rank = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw InvalidTypeError("bad rank in '" + text + "'");
    rank = rank * 10 + (t[i] - '0');
    if (rank > 1000) throw InvalidTypeError("rank too large in '" + text + "'");
  }
  DynkinType type{static_cast<DynkinFamily>(pos), rank};
  cartan_matrix(type);  // validates the (family, rank) pair
  return type;
}

IntMatrix cartan_matrix(const DynkinType& type) {
  const int n = type.rank;
  auto invalid = [&] { return InvalidTypeError("no Dynkin diagram " + type.label()); };
  switch (type.family) {
    case DynkinFamily::A: if (n < 1) throw invalid(); break;
    case DynkinFamily::B: if (n < 2) throw invalid(); break;
    case DynkinFamily::C: if (n < 3) throw invalid(); break;
    case DynkinFamily::D: if (n < 4) throw invalid(); break;
    case DynkinFamily::E: if (n < 6 || n > 8) throw invalid(); break;
    case DynkinFamily::F: if (n != 4) throw invalid(); break;
    case DynkinFamily::G: if (n != 2) throw invalid(); break;
    case DynkinFamily::A1xA1: if (n != 2) throw invalid(); break;
  }
  const auto un = static_cast<std::size_t>(n);
  IntMatrix c(un, un);
  for (std::size_t i = 0; i < un; ++i) c(i, i) = 2;
  auto bond = [&](std::size_t i, std::size_t j) { c(i, j) = c(j, i) = -1; };

  switch (type.family) {
    case DynkinFamily::A1xA1:
      break;
    case DynkinFamily::A:
    case DynkinFamily::B:
    case DynkinFamily::C:
    case DynkinFamily::F:
    case DynkinFamily::G:
      for (std::size_t i = 0; i + 1 < un; ++i) bond(i, i + 1);
      break;
    case DynkinFamily::D:
      for (std::size_t i = 0; i + 2 < un; ++i) bond(i, i + 1);
      bond(un - 3, un - 1);
      break;
    case DynkinFamily::E:
      // chain 0-2-3-4-..., node 1 attached to node 3
      bond(0, 2);
      for (std::size_t i = 2; i + 1 < un; ++i) bond(i, i + 1);
      bond(1, 3);
      break;
  }
  switch (type.family) {
    case DynkinFamily::B: c(un - 1, un - 2) = -2; break;
    case DynkinFamily::C: c(un - 2, un - 1) = -2; break;
    case DynkinFamily::F: c(1, 2) = -2; break;
    case DynkinFamily::G: c(1, 0) = -3; break;
    default: break;
  }
  return c;
}

ExchangeMatrix build_cartan_seed(const DynkinType& type, Orientation orientation) {
  const IntMatrix c = cartan_matrix(type);
  const std::size_t n = c.rows();

  std::vector<int> color(n, 0);
  if (orientation == Orientation::bipartite) {
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      std::queue<std::size_t> q;
      q.push(root);
      seen[root] = true;
      while (!q.empty()) {
        const std::size_t i = q.front();
        q.pop();
        for (std::size_t j = 0; j < n; ++j)
          if (j != i && c(i, j) != 0 && !seen[j]) {
            seen[j] = true;
            color[j] = 1 - color[i];
            q.push(j);
          }
      }
    }
  }

  IntMatrix eps(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || c(i, j) == 0) continue;
      const bool negative = orientation == Orientation::linear ? i < j : color[i] == 0;
      eps(i, j) = negative ? c(i, j) : -c(i, j);
    }
  return ExchangeMatrix(std::move(eps));
}

ExchangeMatrix build_cartan_seed(DynkinFamily family, int rank, Orientation orientation) {
  DynkinType type{family, rank};
  return build_cartan_seed(type, orientation);
}

}  // namespace cluster_quake
