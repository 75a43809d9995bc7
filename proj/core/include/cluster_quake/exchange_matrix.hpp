#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cluster_quake/matrix.hpp"

namespace cluster_quake {

// Bijection of {0..n-1}; sigma(i) is the image of i.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_.at(i); }
  Permutation inverse() const;
  const std::vector<std::size_t>& image() const { return image_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

// Permutes rows: result row i is row sigma^{-1}(i) of m.
IntMatrix permute_rows(const IntMatrix& m, const Permutation& sigma);

// Skew-symmetrizable integer matrix together with its minimal positive symmetrizer d,
// normalized so that eps(i,j) * d[j] == -eps(j,i) * d[i].
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(IntMatrix entries);
  ExchangeMatrix(IntMatrix entries, std::vector<Int> symmetrizer);

  std::size_t size() const { return entries_.rows(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const { return entries_; }
  const std::vector<Int>& symmetrizer() const { return d_; }

  ExchangeMatrix mutate(std::size_t k) const;
  ExchangeMatrix relabel(const Permutation& sigma) const;
  ExchangeMatrix negated() const;
  ExchangeMatrix submatrix(const std::vector<std::size_t>& indices) const;

  // Transpositions (a b) with d_a == d_b, a < b.
  std::vector<std::pair<std::size_t, std::size_t>> admissible_transpositions() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  IntMatrix entries_;
  std::vector<Int> d_;
};

// Componentwise-minimal symmetrizer; throws SymmetrizerMismatchError if eps is not
// skew-symmetrizable.
std::vector<Int> compute_symmetrizer(const IntMatrix& eps);

inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& eps, std::size_t k) { return eps.mutate(k); }
inline ExchangeMatrix relabel(const ExchangeMatrix& eps, const Permutation& sigma) { return eps.relabel(sigma); }

enum class DynkinFamily { A, B, C, D, E, F, G, A1xA1 };
enum class Orientation { linear, bipartite };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  std::string label() const;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// "A2", "b3", "E8", "A1xA1"; throws InvalidTypeError.
DynkinType parse_dynkin_type(const std::string& text);

IntMatrix cartan_matrix(const DynkinType& type);

ExchangeMatrix build_cartan_seed(const DynkinType& type, Orientation orientation = Orientation::linear);
ExchangeMatrix build_cartan_seed(DynkinFamily family, int rank, Orientation orientation = Orientation::linear);

}  // namespace cluster_quake
