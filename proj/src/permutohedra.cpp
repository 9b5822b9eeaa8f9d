#include "cubehom/permutohedra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cubehom/errors.hpp"

namespace cubehom {

int perm_sign(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

Perm perm_compose(const Perm& sigma, const Perm& phi) {
  Perm out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i)
    out[i] = sigma.at(static_cast<std::size_t>(phi[i] - 1));
  return out;
}

Perm perm_identity(int n) {
  Perm out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

CompositionSeq::CompositionSeq(std::vector<int> parts) : parts_(std::move(parts)) {
  breaks_.push_back(0);
  for (int p : parts_) {
    if (p < 1) throw InputError("composition parts must be positive");
    n_ += p;
    breaks_.push_back(n_);
  }
}

CompositionSeq CompositionSeq::refine(int k, int r) const {
  if (k < 1 || k > block_count()) throw InputError("refine: block index out of range");
  const int nk = part(k);
  if (r < 1 || r >= nk) throw InputError("refine: split size out of range");
  std::vector<int> parts;
  parts.reserve(parts_.size() + 1);
  parts.insert(parts.end(), parts_.begin(), parts_.begin() + (k - 1));
  parts.push_back(r);
  parts.push_back(nk - r);
  parts.insert(parts.end(), parts_.begin() + k, parts_.end());
  return CompositionSeq(std::move(parts));
}

std::string CompositionSeq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

OrderedPartition::OrderedPartition(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw InputError("ordered partition must have positive arity");
  blocks_ = *std::max_element(values_.begin(), values_.end());
  std::vector<bool> hit(static_cast<std::size_t>(blocks_), false);
  for (int v : values_) {
    if (v < 1) throw InputError("ordered partition values must be positive");
    hit[static_cast<std::size_t>(v - 1)] = true;
  }
  for (bool h : hit)
    if (!h) throw InputError("ordered partition must be surjective onto an initial segment");
}

OrderedPartition OrderedPartition::of_composition(const CompositionSeq& shape) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(shape.n()));
  for (int k = 1; k <= shape.block_count(); ++k)
    values.insert(values.end(), static_cast<std::size_t>(shape.part(k)), k);
  return OrderedPartition(std::move(values));
}

bool OrderedPartition::leq(const OrderedPartition& g) const {
  if (arity() != g.arity()) return false;
  // g must be constant on every level set of f, and the induced map h
  // between the values must be non-decreasing.
  std::vector<int> h(static_cast<std::size_t>(blocks_), 0);
  for (int i = 1; i <= arity(); ++i) {
    int& slot = h[static_cast<std::size_t>(value(i) - 1)];
    if (slot == 0) {
      slot = g.value(i);
    } else if (slot != g.value(i)) {
      return false;
    }
  }
  for (std::size_t v = 1; v < h.size(); ++v)
    if (h[v] < h[v - 1]) return false;
  return true;
}

OrderedPartition OrderedPartition::precompose(const Perm& sigma) const {
  if (static_cast<int>(sigma.size()) != arity())
    throw InputError("precompose: permutation size mismatch");
  std::vector<int> values;
  values.reserve(sigma.size());
  for (int i = 1; i <= arity(); ++i) values.push_back(value(sigma[static_cast<std::size_t>(i - 1)]));
  return OrderedPartition(std::move(values));
}

std::string OrderedPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

void check_composition_budget(const CompositionSeq& shape, const PermBudget& budget) {
  long long terms = 1;
  auto mul = [&](int f) {
    for (int i = 2; i <= f; ++i) {
      terms *= i;
      if (terms > budget.max_terms)
        throw BudgetError("composition " + shape.to_string() +
                          " exceeds the enumeration budget of " +
                          std::to_string(budget.max_terms) + " terms");
    }
  };
  for (int k = 1; k <= shape.block_count(); ++k) {
    if (shape.part(k) > budget.max_block)
      throw BudgetError("composition " + shape.to_string() + " has a block of size " +
                        std::to_string(shape.part(k)) + ", above the configured maximum " +
                        std::to_string(budget.max_block));
    mul(shape.part(k));
  }
  mul(shape.cell_dim());
}

PartitionPoset::PartitionPoset(const CompositionSeq& shape,
                               std::vector<OrderedPartition> elements)
    : shape_(shape), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const OrderedPartition top = OrderedPartition::of_composition(shape_);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    index_.emplace(elements_[i].values(), static_cast<int>(i));
    if (elements_[i] == top) top_ = static_cast<int>(i);
  }
  if (top_ < 0) throw std::logic_error("PartitionPoset: greatest element missing");
}

std::optional<int> PartitionPoset::index_of(const OrderedPartition& f) const {
  auto it = index_.find(f.values());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

/// All surjections {1..n} -> {1..k} over all k, by plain odometer plus a
/// surjectivity filter; fine for the block sizes the budget admits.
std::vector<OrderedPartition> enumerate_single_block(int n) {
  std::vector<OrderedPartition> out;
  std::vector<int> values(static_cast<std::size_t>(n), 1);
  while (true) {
    const int mx = *std::max_element(values.begin(), values.end());
    std::vector<bool> hit(static_cast<std::size_t>(mx), false);
    for (int v : values) hit[static_cast<std::size_t>(v - 1)] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
      out.emplace_back(values);
    int i = n - 1;
    while (i >= 0 && values[static_cast<std::size_t>(i)] == n) {
      values[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++values[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

PartitionPoset enumerate_ordered_partitions(const CompositionSeq& shape,
                                            const PermBudget& budget) {
  check_composition_budget(shape, budget);
  std::vector<std::vector<OrderedPartition>> per_block;
  per_block.reserve(static_cast<std::size_t>(shape.block_count()));
  for (int k = 1; k <= shape.block_count(); ++k)
    per_block.push_back(enumerate_single_block(shape.part(k)));

  std::vector<OrderedPartition> elements;
  std::vector<std::size_t> pick(per_block.size(), 0);
  while (true) {
    std::vector<OrderedPartition> components;
    components.reserve(pick.size());
    for (std::size_t k = 0; k < pick.size(); ++k) components.push_back(per_block[k][pick[k]]);
    elements.push_back(reassemble_components(components));
    std::size_t k = pick.size();
    while (k > 0 && pick[k - 1] + 1 == per_block[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
    ++pick[k - 1];
  }
  return PartitionPoset(shape, std::move(elements));
}

std::vector<OrderedPartition> factor_components(const OrderedPartition& f,
                                                const CompositionSeq& shape) {
  if (f.arity() != shape.n() || !f.leq(OrderedPartition::of_composition(shape)))
    throw InputError("factor_components: partition " + f.to_string() +
                     " is not below the composition " + shape.to_string());
  std::vector<OrderedPartition> out;
  out.reserve(static_cast<std::size_t>(shape.block_count()));
  for (int k = 1; k <= shape.block_count(); ++k) {
    const int lo = shape.breakpoint(k - 1) + 1;
    const int hi = shape.breakpoint(k);
    int offset = f.value(lo);
    for (int i = lo; i <= hi; ++i) offset = std::min(offset, f.value(i));
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) values.push_back(f.value(i) - offset + 1);
    out.emplace_back(std::move(values));
  }
  return out;
}

OrderedPartition reassemble_components(const std::vector<OrderedPartition>& components) {
  std::vector<int> values;
  int offset = 0;
  for (const OrderedPartition& c : components) {
    for (int i = 1; i <= c.arity(); ++i) values.push_back(c.value(i) + offset);
    offset += c.blocks();
  }
  return OrderedPartition(std::move(values));
}

TauFunction::TauFunction(int simplex_dim, std::vector<int> values)
    : dim_(simplex_dim), values_(std::move(values)) {
  if (dim_ < 0) throw InputError("tau: negative simplex dimension");
  std::vector<bool> hit(static_cast<std::size_t>(dim_) + 2, false);
  for (int v : values_) {
    if (v < 0 || v > dim_ + 1) throw InputError("tau: value out of range");
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int j = 1; j <= dim_; ++j)
    if (!hit[static_cast<std::size_t>(j)])
      throw InputError("tau: value " + std::to_string(j) + " is not attained");
}

TauFunction TauFunction::collapse(int j) const {
  if (j < 0 || j > dim_) throw InputError("tau collapse index out of range");
  std::vector<int> values;
  values.reserve(values_.size());
  for (int v : values_) values.push_back(v > j ? v - 1 : v);
  return TauFunction(dim_ - 1, std::move(values));
}

std::vector<OrderedPartition> simplex_vertices(const Perm& sigma, const TauFunction& tau) {
  const int n = tau.arity();
  if (static_cast<int>(sigma.size()) != n)
    throw InputError("simplex_vertices: permutation size mismatch");
  std::vector<OrderedPartition> out;
  out.reserve(static_cast<std::size_t>(tau.simplex_dim()) + 1);
  for (int j = 0; j <= tau.simplex_dim(); ++j) {
    // f for the threshold of tau at j: 1 + number of positions m < i with tau(m) > j.
    std::vector<int> f(static_cast<std::size_t>(n));
    int acc = 1;
    for (int i = 1; i <= n; ++i) {
      f[static_cast<std::size_t>(i - 1)] = acc;
      if (i < n && tau.value(i) > j) ++acc;
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      values[static_cast<std::size_t>(i - 1)] =
          f[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)];
    out.emplace_back(std::move(values));
  }
  return out;
}

PermSimplex PermSimplex::canonical(const Perm& sigma, const TauFunction& tau) {
  // The stabilizer of the finest vertex permutes positions within the level
  // sets of the threshold-at-0 function, which are intervals; the
  // lexicographically least coset member hands each interval's values to the
  // positions mapping into it, in increasing position order.
  const int n = tau.arity();
  // level id for each position x: increments after every x with tau(x) > 0.
  std::vector<int> level_of(static_cast<std::size_t>(n) + 1, 0);
  int level = 0;
  std::vector<int> next_value{0, 1};  // per level, next value to hand out
  for (int x = 1; x <= n; ++x) {
    level_of[static_cast<std::size_t>(x)] = level;
    if (x < n && tau.value(x) > 0) {
      ++level;
      next_value.push_back(x + 1);
    }
  }
  Perm canon(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int lvl = level_of[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)])];
    canon[static_cast<std::size_t>(i - 1)] = next_value[static_cast<std::size_t>(lvl + 1)]++;
  }
  return PermSimplex{std::move(canon), tau};
}

std::vector<Perm> enumerate_block_permutations(const CompositionSeq& shape) {
  const int n = shape.n();
  std::vector<std::vector<Perm>> per_block;
  for (int k = 1; k <= shape.block_count(); ++k) {
    std::vector<Perm> perms;
    Perm p = perm_identity(shape.part(k));
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    per_block.push_back(std::move(perms));
  }
  std::vector<Perm> out;
  std::vector<std::size_t> pick(per_block.size(), 0);
  while (true) {
    Perm sigma = perm_identity(n);
    for (int k = 1; k <= shape.block_count(); ++k) {
      const int base = shape.breakpoint(k - 1);
      const Perm& local = per_block[static_cast<std::size_t>(k - 1)][pick[static_cast<std::size_t>(k - 1)]];
      for (int i = 1; i <= shape.part(k); ++i)
        sigma[static_cast<std::size_t>(base + i - 1)] = base + local[static_cast<std::size_t>(i - 1)];
    }
    out.push_back(std::move(sigma));
    std::size_t k = pick.size();
    while (k > 0 && pick[k - 1] + 1 == per_block[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
    ++pick[k - 1];
  }
  return out;
}

std::vector<TauFunction> enumerate_top_taus(const CompositionSeq& shape) {
  const int n = shape.n();
  const int d = shape.cell_dim();
  std::vector<bool> is_break(static_cast<std::size_t>(n), false);
  for (int k = 1; k < shape.block_count(); ++k)
    is_break[static_cast<std::size_t>(shape.breakpoint(k))] = true;
  std::vector<int> free_positions;
  for (int i = 1; i <= n - 1; ++i)
    if (!is_break[static_cast<std::size_t>(i)]) free_positions.push_back(i);

  std::vector<TauFunction> out;
  Perm assignment = perm_identity(d);
  do {
    std::vector<int> values(static_cast<std::size_t>(n - 1), d + 1);
    for (std::size_t j = 0; j < free_positions.size(); ++j)
      values[static_cast<std::size_t>(free_positions[j] - 1)] = assignment[j];
    out.emplace_back(d, std::move(values));
  } while (std::next_permutation(assignment.begin(), assignment.end()));
  return out;
}

int tau_sign(const CompositionSeq& shape, const TauFunction& tau) {
  const int d = shape.cell_dim();
  if (tau.simplex_dim() != d || tau.arity() != shape.n())
    throw InputError("tau_sign: tau is not top-dimensional for " + shape.to_string());
  for (int k = 1; k < shape.block_count(); ++k)
    if (tau.value(shape.breakpoint(k)) != d + 1)
      throw InputError("tau_sign: tau does not carry the top value at breakpoint " +
                       std::to_string(shape.breakpoint(k)));
  Perm restricted;
  std::vector<bool> is_break(static_cast<std::size_t>(shape.n()), false);
  for (int k = 1; k < shape.block_count(); ++k)
    is_break[static_cast<std::size_t>(shape.breakpoint(k))] = true;
  for (int i = 1; i <= shape.n() - 1; ++i)
    if (!is_break[static_cast<std::size_t>(i)]) restricted.push_back(tau.value(i));
  if (static_cast<int>(restricted.size()) != d)
    throw InputError("tau_sign: wrong number of free positions");
  return perm_sign(restricted);
}

int subset_sign(const std::vector<int>& a, int offset) {
  if (a.empty()) throw InputError("subset_sign: empty subset");
  long long s = 0;
  for (int x : a) s += x - offset;
  const long long r = static_cast<long long>(a.size());
  const long long target = r * (r + 1) / 2;
  return ((s - target) % 2 + 2) % 2 == 0 ? 1 : -1;
}

Perm xi_permutation(const CompositionSeq& shape, int k, const std::vector<int>& a_global) {
  if (k < 1 || k > shape.block_count()) throw InputError("xi: block index out of range");
  const int lo = shape.breakpoint(k - 1) + 1;
  const int hi = shape.breakpoint(k);
  const int r = static_cast<int>(a_global.size());
  if (r < 1 || r >= shape.part(k))
    throw InputError("xi: subset must be a nonempty proper subset of the block");
  std::vector<int> sorted = a_global;
  std::sort(sorted.begin(), sorted.end());
  for (int x : sorted)
    if (x < lo || x > hi) throw InputError("xi: subset leaves block " + std::to_string(k));

  Perm xi = perm_identity(shape.n());
  int next_a = lo;
  int next_rest = lo + r;
  std::size_t cursor = 0;
  for (int i = lo; i <= hi; ++i) {
    if (cursor < sorted.size() && sorted[cursor] == i) {
      xi[static_cast<std::size_t>(i - 1)] = next_a++;
      ++cursor;
    } else {
      xi[static_cast<std::size_t>(i - 1)] = next_rest++;
    }
  }
  return xi;
}

void chain_add(SignedChain& chain, const SimplexKey& key, long long coefficient) {
  if (coefficient == 0) return;
  auto it = chain.find(key);
  if (it == chain.end()) {
    chain.emplace(key, coefficient);
    return;
  }
  it->second += coefficient;
  if (it->second == 0) chain.erase(it);
}

SignedChain simplicial_boundary(const SignedChain& chain) {
  SignedChain out;
  for (const auto& [key, coefficient] : chain) {
    if (key.size() <= 1) continue;
    for (std::size_t j = 0; j < key.size(); ++j) {
      SimplexKey face;
      face.reserve(key.size() - 1);
      for (std::size_t i = 0; i < key.size(); ++i)
        if (i != j) face.push_back(key[i]);
      chain_add(out, face, j % 2 == 0 ? coefficient : -coefficient);
    }
  }
  return out;
}

SignedChain fundamental_cycle(const CompositionSeq& shape, const PartitionPoset& poset,
                              const PermBudget& budget) {
  check_composition_budget(shape, budget);
  if (!(poset.shape() == shape))
    throw InputError("fundamental_cycle: poset does not belong to the composition");
  SignedChain out;
  const std::vector<Perm> sigmas = enumerate_block_permutations(shape);
  const std::vector<TauFunction> taus = enumerate_top_taus(shape);
  for (const TauFunction& tau : taus) {
    const int ts = tau_sign(shape, tau);
    for (const Perm& sigma : sigmas) {
      const long long coefficient = static_cast<long long>(perm_sign(sigma)) * ts;
      SimplexKey key;
      key.reserve(static_cast<std::size_t>(tau.simplex_dim()) + 1);
      for (const OrderedPartition& vertex : simplex_vertices(sigma, tau)) {
        auto idx = poset.index_of(vertex);
        if (!idx)
          throw std::logic_error("fundamental_cycle: vertex " + vertex.to_string() +
                                 " missing from the poset of " + shape.to_string());
        key.push_back(*idx);
      }
      chain_add(out, key, coefficient);
    }
  }
  return out;
}

std::vector<PermBoundaryTerm> permutohedral_boundary(const CompositionSeq& shape,
                                                     const PartitionPoset& poset,
                                                     const PermBudget& budget) {
  check_composition_budget(shape, budget);
  if (shape.cell_dim() < 1) return {};
  std::vector<PermBoundaryTerm> out;
  for (int k = 1; k <= shape.block_count(); ++k) {
    const int nk = shape.part(k);
    const int b = shape.breakpoint(k - 1);
    for (int r = 1; r <= nk - 1; ++r) {
      const CompositionSeq refined = shape.refine(k, r);
      const PartitionPoset sub = enumerate_ordered_partitions(refined, budget);
      const SignedChain cycle = fundamental_cycle(refined, sub, budget);
      // Subsets of the block of size r, in lexicographic order.
      std::vector<int> a(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)] = b + 1 + i;
      while (true) {
        const Perm xi = xi_permutation(shape, k, a);
        PermBoundaryTerm term;
        term.k = k;
        term.r = r;
        term.subset_global = a;
        const int exponent = k + r + b + 1;
        term.coefficient = (exponent % 2 == 0 ? 1 : -1) * subset_sign(a, b);
        for (const auto& [key, coefficient] : cycle) {
          SimplexKey pushed;
          pushed.reserve(key.size());
          for (int v : key) {
            const OrderedPartition image = sub.element(v).precompose(xi);
            auto idx = poset.index_of(image);
            if (!idx)
              throw std::logic_error("permutohedral_boundary: pushed vertex missing from poset");
            pushed.push_back(*idx);
          }
          chain_add(term.embedded, pushed, coefficient);
        }
        out.push_back(std::move(term));
        // next r-subset of {b+1..b+nk}
        int i = r - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == b + nk - (r - 1 - i)) --i;
        if (i < 0) break;
        ++a[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
          a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

}  // namespace cubehom
