#include "cluster_quake/pattern.hpp"

#include <algorithm>
#include <deque>

namespace cluster_quake {

SeedData::SeedData(ExchangeMatrix e)
    : eps(std::move(e)), C(IntMatrix::identity(eps.size())), F(initial_f_tuple(eps.size())) {}

IntMatrix mutate_c_matrix(const IntMatrix& C, const ExchangeMatrix& eps, std::size_t k) {
  const std::size_t n = eps.size();
  if (k >= n) throw IndexError("mutation direction out of range");
  IntMatrix out(n, C.cols());
  for (std::size_t j = 0; j < C.cols(); ++j) {
    const Int xk = C(k, j);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) {
        out(i, j) = -xk;
      } else {
        // x_i + [sgn(x_k) eps_ik]_+ x_k
        const Int coef = positive_part(checked::mul(sign_of(xk), eps(i, k)));
        out(i, j) = checked::add(C(i, j), checked::mul(coef, xk));
      }
    }
  }
  return out;
}

IntMatrix mutate_c_matrix_rows(const IntMatrix& C, const ExchangeMatrix& eps, std::size_t k) {
  const std::size_t n = eps.size();
  if (k >= n) throw IndexError("mutation direction out of range");
  IntMatrix out(n, C.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < C.cols(); ++j) {
      const Int ckj = C(k, j);
      if (i == k) {
        out(i, j) = -ckj;
      } else {
        const Int eik = eps(i, k);
        out(i, j) = checked::add(checked::add(C(i, j), checked::mul(positive_part(eik), ckj)),
                                 checked::mul(eik, positive_part(-ckj)));
      }
    }
  return out;
}

SeedData mutate_seed_data(const SeedData& s, std::size_t k) {
  SeedData next = s;
  next.F = mutate_F(s.F, s.C, s.eps, k);
  next.C = mutate_c_matrix(s.C, s.eps, k);
  next.eps = s.eps.mutate(k);
  return next;
}

SeedData follow_path(const ExchangeMatrix& eps, const std::vector<std::size_t>& directions) {
  SeedData s(eps);
  for (std::size_t k : directions) s = mutate_seed_data(s, k);
  return s;
}

bool sign_coherent(const IntMatrix& C) {
  for (std::size_t i = 0; i < C.rows(); ++i) {
    bool pos = false, neg = false;
    for (std::size_t j = 0; j < C.cols(); ++j) {
      pos = pos || C(i, j) > 0;
      neg = neg || C(i, j) < 0;
    }
    if (pos == neg) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

ExchangePattern::ExchangePattern(ExchangeMatrix base_eps, std::string type_tag)
    : base_eps_(std::move(base_eps)), type_tag_(std::move(type_tag)) {}

const PatternVertex& ExchangePattern::vertex(std::size_t id) const {
  if (id >= vertices_.size()) throw LookupError("unknown vertex " + std::to_string(id));
  return vertices_[id];
}

ExchangePattern::Key ExchangePattern::key_of(const ExchangeMatrix& eps, const IntMatrix& C) {
  return {eps.entries().data(), C.data()};
}

std::optional<std::size_t> ExchangePattern::find(const ExchangeMatrix& eps, const IntMatrix& C) const {
  auto it = index_.find(key_of(eps, C));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<WalkStep> ExchangePattern::walk(std::size_t from, std::size_t to) const {
  auto chain = [this](std::size_t v) {
    std::vector<std::size_t> c{v};
    while (vertex(c.back()).parent) c.push_back(*vertex(c.back()).parent);
    std::reverse(c.begin(), c.end());  // base first
    return c;
  };
  const auto up = chain(from);
  const auto down = chain(to);
  std::size_t common = 0;
  while (common < up.size() && common < down.size() && up[common] == down[common]) ++common;

  std::vector<WalkStep> steps;
  for (std::size_t i = up.size(); i > common; --i) {
    const PatternVertex& u = vertices_[up[i - 1]];
    steps.push_back({u.id, u.path.back(), *u.parent});
  }
  for (std::size_t i = common; i < down.size(); ++i) {
    const PatternVertex& c = vertices_[down[i]];
    steps.push_back({*c.parent, c.path.back(), c.id});
  }
  return steps;
}

namespace {

void finalize_vertex(PatternVertex& v, const ExchangeMatrix& base_eps) {
  const std::size_t n = base_eps.size();
  if (!sign_coherent(v.C)) throw ConsistencyError("C-matrix with a sign-incoherent row");
  const IntMatrix inv = inverse_unimodular(v.C);
  auto g = conjugate_by_diagonal(inv.transpose(), base_eps.symmetrizer());
  if (!g) throw ConsistencyError("G-matrix is not integral");
  v.G = std::move(*g);
  v.f_mat = f_matrix(v.F);

  std::vector<std::size_t> back(v.path.rbegin(), v.path.rend());
  SeedData s = follow_path(v.eps, back);
  if (!(s.eps == base_eps)) throw ConsistencyError("reverse path does not return to the base seed");
  v.C_back = std::move(s.C);
  v.C_back_inverse = inverse_unimodular(v.C_back);
  v.F_back = std::move(s.F);
  v.f_back = f_matrix(v.F_back);
  v.neighbors.resize(n);
}

}  // namespace

ExchangePattern enumerate(const ExchangeMatrix& eps0, const EnumerateOptions& options) {
  if (options.cap < 1) throw DomainError("vertex budget must be at least 1");
  const std::size_t n = eps0.size();
  auto pattern = std::make_shared<ExchangePattern>(eps0, options.type_tag);
  auto& verts = pattern->vertices_;

  auto add_vertex = [&](SeedData seed, std::vector<std::size_t> path, std::optional<std::size_t> parent) {
    PatternVertex v;
    v.id = verts.size();
    v.eps = std::move(seed.eps);
    v.C = std::move(seed.C);
    v.F = std::move(seed.F);
    v.path = std::move(path);
    v.parent = parent;
    v.neighbors.assign(n, 0);
    pattern->index_.emplace(ExchangePattern::key_of(v.eps, v.C), v.id);
    verts.push_back(std::move(v));
    return verts.back().id;
  };

  add_vertex(SeedData(eps0), {}, std::nullopt);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    SeedData here(verts[id].eps);
    here.C = verts[id].C;
    here.F = verts[id].F;
    for (std::size_t k = 0; k < n; ++k) {
      SeedData child(here.eps);
      try {
        child = mutate_seed_data(here, k);
      } catch (const OverflowError&) {
        throw BudgetExceededError("integer overflow after " + std::to_string(verts.size()) +
                                      " vertices; mutation class is probably of infinite type",
                                  pattern);
      }
      std::size_t to;
      if (auto found = pattern->find(child.eps, child.C)) {
        to = *found;
      } else {
        if (verts.size() >= options.cap)
          throw BudgetExceededError("vertex budget of " + std::to_string(options.cap) +
                                        " exhausted; mutation class is probably of infinite type",
                                    pattern);
        auto path = verts[id].path;
        path.push_back(k);
        to = add_vertex(std::move(child), std::move(path), id);
        queue.push_back(to);
      }
      verts[id].neighbors[k] = to;
      if (id < to) pattern->edges_.push_back({id, to, EdgeKind::mutation, k, {}});
    }
  }

  for (auto& v : verts) finalize_vertex(v, eps0);

  if (options.include_permutations) {
    for (const auto& v : verts)
      for (auto [a, b] : v.eps.admissible_transpositions()) {
        const Permutation sigma = Permutation::transposition(n, a, b);
        auto w = pattern->find(v.eps.relabel(sigma), permute_rows(v.C, sigma));
        if (w && v.id < *w) pattern->edges_.push_back({v.id, *w, EdgeKind::permutation, 0, {a, b}});
      }
  }
  pattern->complete_ = true;
  return std::move(*pattern);
}

ExchangePattern enumerate(const DynkinType& type, const EnumerateOptions& options) {
  EnumerateOptions opts = options;
  if (opts.type_tag == "custom") opts.type_tag = type.label();
  return enumerate(build_cartan_seed(type), opts);
}

Sign tropical_sign(const ExchangePattern& p, std::size_t v, std::size_t k) {
  const IntMatrix& C = p.vertex(v).C;
  if (k >= C.rows()) throw IndexError("direction out of range");
  for (std::size_t j = 0; j < C.cols(); ++j) {
    if (C(k, j) > 0) return Sign::plus;
    if (C(k, j) < 0) return Sign::minus;
  }
  throw ConsistencyError("zero c-vector");
}

ExchangePattern opposite(const ExchangePattern& p) {
  EnumerateOptions opts;
  opts.type_tag = p.type_tag();
  opts.cap = std::max<std::size_t>(p.size(), 1);
  ExchangePattern q = enumerate(p.base_eps().negated(), opts);
  if (q.size() != p.size()) throw ConsistencyError("opposite pattern has a different size");
  for (std::size_t v = 0; v < p.size(); ++v)
    if (!(q.vertex(v).eps == p.vertex(v).eps.negated()) || q.vertex(v).path != p.vertex(v).path)
      throw ConsistencyError("opposite pattern is not vertex-aligned");
  return q;
}

IntMatrix opposite_c_matrix(const ExchangePattern& p, std::size_t v) {
  return follow_path(p.base_eps().negated(), p.vertex(v).path).C;
}

IntMatrix opposite_c_matrix_back(const ExchangePattern& p, std::size_t v) {
  const auto& path = p.vertex(v).path;
  return follow_path(p.vertex(v).eps.negated(), {path.rbegin(), path.rend()}).C;
}

namespace {

MatrixCheck make_check(IntMatrix value, const IntMatrix& expected) {
  MatrixCheck r;
  r.residual = value - expected;
  r.ok = std::all_of(r.residual.data().begin(), r.residual.data().end(), [](Int x) { return x == 0; });
  r.value = std::move(value);
  return r;
}

}  // namespace

MatrixCheck fugy_check(const ExchangePattern& p, std::size_t v) {
  const PatternVertex& pv = p.vertex(v);
  return make_check(pv.C_back + p.base_eps().entries() * pv.f_back, opposite_c_matrix_back(p, v));
}

MatrixCheck duality_check(const ExchangePattern& p, std::size_t v) {
  return make_check(inverse_unimodular(opposite_c_matrix(p, v)), p.vertex(v).C_back);
}

MatrixCheck fc_product(const ExchangePattern& p, std::size_t v, Sign sign) {
  const PatternVertex& pv = p.vertex(v);
  MatrixCheck r;
  r.value = pv.f_back * (sign == Sign::plus ? pv.C : opposite_c_matrix(p, v));
  r.ok = all_nonpositive(r.value);
  r.residual = IntMatrix(r.value.rows(), r.value.cols());
  for (std::size_t i = 0; i < r.value.rows(); ++i)
    for (std::size_t j = 0; j < r.value.cols(); ++j) r.residual(i, j) = positive_part(r.value(i, j));
  return r;
}

std::vector<std::size_t> cone_representatives(const ExchangePattern& p) {
  std::vector<std::size_t> reps(p.size());
  std::map<std::vector<std::vector<Int>>, std::size_t> first;
  for (const auto& v : p.vertices()) {
    std::vector<std::vector<Int>> cols;
    for (std::size_t j = 0; j < v.C_back.cols(); ++j) cols.push_back(v.C_back.col(j));
    std::sort(cols.begin(), cols.end());
    reps[v.id] = first.emplace(std::move(cols), v.id).first->second;
  }
  return reps;
}

std::vector<Cone> fan(const ExchangePattern& p) {
  std::vector<Cone> cones;
  const auto reps = cone_representatives(p);
  for (const auto& v : p.vertices())
    if (reps[v.id] == v.id) cones.push_back({v.id, v.C_back});
  return cones;
}

}  // namespace cluster_quake
