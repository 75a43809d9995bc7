#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cluster_quake/exchange_matrix.hpp"
#include "cluster_quake/fpolynomial.hpp"
#include "cluster_quake/matrix.hpp"

namespace cluster_quake {

enum class Sign { plus = 1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Exchange matrix, C-matrix and F-polynomials carried along a mutation path.
struct SeedData {
  ExchangeMatrix eps;
  IntMatrix C;
  FTuple F;

  explicit SeedData(ExchangeMatrix e);
};

// C-matrix after mutation k, computed column by column from the tropical
// coordinate change on the positive orthant.
IntMatrix mutate_c_matrix(const IntMatrix& C, const ExchangeMatrix& eps, std::size_t k);

// Same matrix via the row recursion c'_ij = c_ij + [eps_ik]_+ c_kj + eps_ik [-c_kj]_+.
IntMatrix mutate_c_matrix_rows(const IntMatrix& C, const ExchangeMatrix& eps, std::size_t k);

SeedData mutate_seed_data(const SeedData& s, std::size_t k);

// Seed data after following the mutation directions from an initial seed eps (C = Id, F = 1).
SeedData follow_path(const ExchangeMatrix& eps, const std::vector<std::size_t>& directions);

struct PatternVertex {
  std::size_t id = 0;
  ExchangeMatrix eps;
  IntMatrix C;        // C^s_{v0 -> v}; rows are c-vectors
  IntMatrix G;        // D (C^{-1})^T D^{-1}
  FTuple F;           // F-polynomials from v0 to v
  IntMatrix f_mat;
  IntMatrix C_back;   // C^s_{v -> v0}; columns generate the cone of v in the base chart
  IntMatrix C_back_inverse;
  FTuple F_back;      // F-polynomials from v to v0
  IntMatrix f_back;
  std::vector<std::size_t> path;       // mutation directions from the base vertex
  std::optional<std::size_t> parent;
  std::vector<std::size_t> neighbors;  // neighbors[k] = mu_k(v)
};

enum class EdgeKind { mutation, permutation };

struct PatternEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::mutation;
  std::size_t direction = 0;                         // mutation edges
  std::pair<std::size_t, std::size_t> transposition;  // permutation edges
};

struct Cone {
  std::size_t vertex_id = 0;
  IntMatrix generators;  // columns are the generating vectors in the base chart
};

struct EnumerateOptions {
  std::size_t cap = 50000;
  bool include_permutations = true;
  std::string type_tag = "custom";
};

// One step of a walk between charts: mutate in direction k out of vertex `from`.
struct WalkStep {
  std::size_t from = 0;
  std::size_t direction = 0;
  std::size_t to = 0;
};

class ExchangePattern {
 public:
  ExchangePattern(ExchangeMatrix base_eps, std::string type_tag);

  std::size_t rank() const { return base_eps_.size(); }
  std::size_t base() const { return 0; }
  const ExchangeMatrix& base_eps() const { return base_eps_; }
  const std::string& type_tag() const { return type_tag_; }
  bool complete() const { return complete_; }

  std::size_t size() const { return vertices_.size(); }
  const PatternVertex& vertex(std::size_t id) const;
  const std::vector<PatternVertex>& vertices() const { return vertices_; }
  const std::vector<PatternEdge>& edges() const { return edges_; }
  std::optional<std::size_t> find(const ExchangeMatrix& eps, const IntMatrix& C) const;

  // Mutation steps leading from chart `from` to chart `to`.
  std::vector<WalkStep> walk(std::size_t from, std::size_t to) const;

  friend ExchangePattern enumerate(const ExchangeMatrix&, const EnumerateOptions&);

 private:
  using Key = std::pair<std::vector<Int>, std::vector<Int>>;
  static Key key_of(const ExchangeMatrix& eps, const IntMatrix& C);

  ExchangeMatrix base_eps_;
  std::string type_tag_;
  bool complete_ = false;
  std::vector<PatternVertex> vertices_;
  std::vector<PatternEdge> edges_;
  std::map<Key, std::size_t> index_;
};

// Thrown by enumerate when the vertex budget runs out; carries the partial pattern.
class BudgetExceededError : public ClusterError {
 public:
  BudgetExceededError(const std::string& what, std::shared_ptr<const ExchangePattern> partial)
      : ClusterError(what), partial_(std::move(partial)) {}
  const std::shared_ptr<const ExchangePattern>& partial() const { return partial_; }

 private:
  std::shared_ptr<const ExchangePattern> partial_;
};

ExchangePattern enumerate(const ExchangeMatrix& eps0, const EnumerateOptions& options = {});
ExchangePattern enumerate(const DynkinType& type, const EnumerateOptions& options = {});

// Sign of the c-vector of direction k at vertex v.
Sign tropical_sign(const ExchangePattern& p, std::size_t v, std::size_t k);

// Pattern of the opposite mutation class; vertex ids follow the same mutation paths.
ExchangePattern opposite(const ExchangePattern& p);

// C^{-s}_{v0 -> v} and C^{-s}_{v -> v0}, computed along the paths of p with negated matrices.
IntMatrix opposite_c_matrix(const ExchangePattern& p, std::size_t v);
IntMatrix opposite_c_matrix_back(const ExchangePattern& p, std::size_t v);

struct MatrixCheck {
  bool ok = false;
  IntMatrix value;     // the matrix computed by the check
  IntMatrix residual;  // zero on success
};

// Residual of C^s_{v->v0} + eps^(v0) F^s_{v->v0} - C^{-s}_{v->v0}.
MatrixCheck fugy_check(const ExchangePattern& p, std::size_t v);

// Residual of C^s_{v->v0} - (C^{-s}_{v0->v})^{-1}.
MatrixCheck duality_check(const ExchangePattern& p, std::size_t v);

// F^s_{v->v0} C^{+-s}_{v0->v}; ok iff every entry is non-positive.
MatrixCheck fc_product(const ExchangePattern& p, std::size_t v, Sign sign);

bool sign_coherent(const IntMatrix& C);

// One cone per maximal cone, deduplicated over relabeled vertices, in vertex-id order.
std::vector<Cone> fan(const ExchangePattern& p);

// For every vertex, the smallest vertex id with the same cone.
std::vector<std::size_t> cone_representatives(const ExchangePattern& p);

}  // namespace cluster_quake
