#include "pzeta/catalog.hpp"

#include <algorithm>

#include "pzeta/error.hpp"

namespace pzeta {

DirichletSeries cyclic_series(std::int64_t n, Index bound) {
  if (n < 1) throw Error("cyclic order must be >= 1");
  if (bound < 1) throw Error("series bound must be >= 1");
  // Subgroups of C_n form the divisor lattice; mu is the number-theoretic
  // Moebius function, supported on squarefree divisors.
  const auto primes = prime_factors(n);
  std::vector<std::pair<Index, Integer>> pairs;
  const std::size_t count = primes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    Index d = 1;
    int sign = 1;
    for (std::size_t i = 0; i < count; ++i)
      if (mask & (std::size_t{1} << i)) {
        d *= primes[i];
        sign = -sign;
      }
    if (d <= bound) pairs.emplace_back(d, sign);
  }
  return DirichletSeries::make(pairs, bound);
}

DirichletSeries elementary_abelian_series(std::int64_t p, int d, Index bound) {
  if (!is_prime(p)) throw Error("elementary abelian base must be prime");
  if (d < 1) throw Error("elementary abelian rank must be >= 1");
  if (bound < 1) throw Error("series bound must be >= 1");
  DirichletSeries acc = DirichletSeries::unit(bound);
  Integer pi = 1;  // p^i
  for (int i = 0; i < d; ++i) {
    std::vector<std::pair<Index, Integer>> pairs = {{1, 1}};
    if (p <= bound) pairs.emplace_back(p, -pi);
    acc = mul(acc, DirichletSeries::make(pairs, bound));
    pi *= p;
  }
  return acc;
}

DirichletSeries alternating_truncated_series(std::int64_t m, Index bound) {
  if (m < 9) throw Error("truncated alternating series requires degree >= 9");
  const Index validity = m * (m - 1);
  if (bound < 1) throw Error("series bound must be >= 1");
  if (bound > validity)
    throw Error("bound " + std::to_string(bound) +
                " exceeds the validity range " + std::to_string(validity) +
                " of the truncated alternating series");
  std::vector<std::pair<Index, Integer>> pairs = {{1, 1}};
  if (m <= bound) pairs.emplace_back(m, -m);
  const Index half = m * (m - 1) / 2;
  if (half <= bound) pairs.emplace_back(half, Integer(-half));
  if (validity <= bound) pairs.emplace_back(validity, Integer(validity));
  return DirichletSeries::make(pairs, bound);
}

DirichletSeries boston_power_series(const DirichletSeries& base, const Integer& f,
                                    const Integer& aut_order,
                                    const Integer& group_order) {
  if (f < 1) throw Error("power multiplicity must be >= 1");
  if (aut_order < 1) throw Error("automorphism group order must be >= 1");
  if (group_order < 2) throw Error("group order must be >= 2");

  if (group_order > base.bound()) {
    // Every correction term -i|Aut S|/|S|^s only contributes at indices
    // that are multiples of |S|, all beyond the bound: the truncated
    // product is exactly the truncated f-th power.
    return pow_truncated(base, f);
  }

  if (f > 65536)
    throw LimitError("explicit power expansion limited to f <= 65536", 65536);
  const Index ord = static_cast<Index>(group_order);
  DirichletSeries acc = base;
  Integer correction = 0;
  for (Integer i = 1; i < f; ++i) {
    correction += aut_order;  // i * |Aut S|
    std::vector<std::pair<Index, Integer>> pairs;
    bool adjusted = false;
    for (const auto& [n, c] : base.terms()) {
      if (n == ord) {
        pairs.emplace_back(n, c - correction);
        adjusted = true;
      } else {
        pairs.emplace_back(n, c);
      }
    }
    if (!adjusted) pairs.emplace_back(ord, -correction);
    acc = mul(acc, DirichletSeries::make(pairs, base.bound()));
  }
  return acc;
}

bool ChiefSignature::disjoint_from(const ChiefSignature& other) const {
  for (auto p : abelian_primes)
    if (other.abelian_primes.count(p)) return false;
  for (auto m : alternating_degrees)
    if (other.alternating_degrees.count(m)) return false;
  for (const auto& o : other_nonabelian_orders)
    if (other.other_nonabelian_orders.count(o)) return false;
  return true;
}

void ChiefSignature::merge(const ChiefSignature& other) {
  abelian_primes.insert(other.abelian_primes.begin(), other.abelian_primes.end());
  alternating_degrees.insert(other.alternating_degrees.begin(),
                             other.alternating_degrees.end());
  other_nonabelian_orders.insert(other.other_nonabelian_orders.begin(),
                                 other.other_nonabelian_orders.end());
}

std::string ChiefSignature::describe() const {
  std::string out = "{primes:";
  for (auto p : abelian_primes) out += " " + std::to_string(p);
  out += "; alt degrees:";
  for (auto m : alternating_degrees) out += " " + std::to_string(m);
  out += "; other orders:";
  for (const auto& o : other_nonabelian_orders) out += " " + to_decimal(o);
  out += "}";
  return out;
}

namespace {

// Alternating degree m with q = (m!/2)^k, if any.
std::optional<std::int64_t> alternating_degree_of_order(const Integer& q) {
  Integer half_fact = 60;  // 5!/2
  for (std::int64_t m = 5; half_fact <= q; ++m) {
    Integer power = half_fact;
    while (power < q) power *= half_fact;
    if (power == q) return m;
    half_fact = half_fact * (m + 1);
  }
  return std::nullopt;
}

bool section_is_abelian(const PermGroup& g, const Subgroup& upper,
                        const Subgroup& lower) {
  for (std::uint32_t a : upper.members)
    for (std::uint32_t b : upper.members) {
      if (b >= a) break;
      // [a, b] = a^{-1} b^{-1} a b
      const std::uint32_t comm = g.product(
          g.inverse_of(a), g.product(g.inverse_of(b), g.product(a, b)));
      if (!lower.bits.test(comm)) return false;
    }
  return true;
}

}  // namespace

ChiefSignature lattice_signature(const SubgroupLattice& lattice) {
  const PermGroup& g = lattice.group();
  std::vector<std::uint32_t> normals;
  for (std::uint32_t i = 0; i < lattice.size(); ++i)
    if (is_normal(g, lattice.subgroups()[i])) normals.push_back(i);

  ChiefSignature sig;
  std::uint32_t current = lattice.top();
  while (lattice.subgroups()[current].order() > 1) {
    // Largest proper normal subgroup of G inside `current` is G-maximal there.
    std::uint32_t next = lattice.bottom();
    std::int64_t best = 0;
    for (std::uint32_t n : normals) {
      const auto& cand = lattice.subgroups()[n];
      if (n == current || cand.order() >= lattice.subgroups()[current].order())
        continue;
      if (!cand.bits.is_subset_of(lattice.subgroups()[current].bits)) continue;
      if (cand.order() > best) {
        best = cand.order();
        next = n;
      }
    }
    const auto& upper = lattice.subgroups()[current];
    const auto& lower = lattice.subgroups()[next];
    const Integer q = upper.order() / lower.order();

    if (section_is_abelian(g, upper, lower)) {
      const auto primes = prime_factors(upper.order() / lower.order());
      if (primes.size() != 1)
        throw Error("abelian chief factor of non-prime-power order (internal bug)");
      sig.abelian_primes.insert(primes[0]);
    } else if (auto deg = alternating_degree_of_order(q)) {
      sig.alternating_degrees.insert(*deg);
    } else {
      sig.other_nonabelian_orders.insert(q);
    }
    current = next;
  }
  return sig;
}

std::shared_ptr<const LatticeData> build_lattice_data(const PermGroup& g,
                                                      std::int64_t lattice_limit) {
  auto data = std::make_shared<LatticeData>();
  data->lattice = enumerate_subgroups(g, lattice_limit);
  data->table = moebius_table(data->lattice);
  return data;
}

namespace {

RecipeEvaluation evaluate(const SeriesRecipe& recipe, Index bound,
                          const GroupLimits& limits,
                          const LatticeProvider& provider);

struct Evaluator {
  Index bound;
  const GroupLimits& limits;
  const LatticeProvider& provider;

  RecipeEvaluation operator()(const LatticeRecipe& r) const {
    const auto gens = parse_generators(r.generators, r.degree);
    const int degree = gens.empty() ? std::max(r.degree, 1)
                                    : gens.front().degree();
    PermGroup g = close_generators(degree, gens, limits.order_limit);
    std::shared_ptr<const LatticeData> data =
        provider ? provider(g) : build_lattice_data(g, limits.lattice_limit);
    return {group_series(data->table, bound), lattice_signature(data->lattice)};
  }

  RecipeEvaluation operator()(const CyclicRecipe& r) const {
    ChiefSignature sig;
    for (auto p : prime_factors(r.n)) sig.abelian_primes.insert(p);
    return {cyclic_series(r.n, bound), std::move(sig)};
  }

  RecipeEvaluation operator()(const ElementaryAbelianRecipe& r) const {
    ChiefSignature sig;
    sig.abelian_primes.insert(r.p);
    return {elementary_abelian_series(r.p, r.d, bound), std::move(sig)};
  }

  RecipeEvaluation operator()(const AlternatingTruncatedRecipe& r) const {
    ChiefSignature sig;
    sig.alternating_degrees.insert(r.m);
    return {alternating_truncated_series(r.m, bound), std::move(sig)};
  }

  RecipeEvaluation operator()(const BostonPowerRecipe& r) const {
    if (!r.base) throw Error("power recipe is missing its base");
    RecipeEvaluation base = evaluate(*r.base, bound, limits, provider);
    return {boston_power_series(base.series, r.f, r.aut_order, r.group_order),
            std::move(base.signature)};
  }

  RecipeEvaluation operator()(const BrownProductRecipe& r) const {
    if (r.factors.empty()) throw Error("product recipe requires at least one factor");
    RecipeEvaluation acc = evaluate(r.factors[0], bound, limits, provider);
    for (std::size_t i = 1; i < r.factors.size(); ++i) {
      RecipeEvaluation next = evaluate(r.factors[i], bound, limits, provider);
      if (!acc.signature.disjoint_from(next.signature))
        throw Error("product factors share chief factors: " +
                    acc.signature.describe() + " vs " + next.signature.describe());
      acc.series = mul(acc.series, next.series);
      acc.signature.merge(next.signature);
    }
    return acc;
  }
};

RecipeEvaluation evaluate(const SeriesRecipe& recipe, Index bound,
                          const GroupLimits& limits,
                          const LatticeProvider& provider) {
  return std::visit(Evaluator{bound, limits, provider}, recipe.v);
}

}  // namespace

RecipeEvaluation evaluate_recipe(const SeriesRecipe& recipe, Index bound,
                                 const GroupLimits& limits,
                                 const LatticeProvider& provider) {
  if (bound < 1) throw Error("series bound must be >= 1");
  return evaluate(recipe, bound, limits, provider);
}

DirichletSeries recipe_series(const SeriesRecipe& recipe, Index bound,
                              const GroupLimits& limits,
                              const LatticeProvider& provider) {
  return evaluate_recipe(recipe, bound, limits, provider).series;
}

std::optional<Index> recipe_default_bound(const SeriesRecipe& recipe,
                                          const GroupLimits& limits) {
  if (const auto* r = std::get_if<LatticeRecipe>(&recipe.v)) {
    const auto gens = parse_generators(r->generators, r->degree);
    const int degree = gens.empty() ? std::max(r->degree, 1)
                                    : gens.front().degree();
    return close_generators(degree, gens, limits.order_limit).order();
  }
  if (const auto* r = std::get_if<CyclicRecipe>(&recipe.v)) return r->n;
  if (const auto* r = std::get_if<ElementaryAbelianRecipe>(&recipe.v)) {
    Index bound = 1;
    for (int i = 0; i < r->d; ++i) bound *= r->p;
    return bound;
  }
  if (const auto* r = std::get_if<AlternatingTruncatedRecipe>(&recipe.v))
    return r->m * (r->m - 1);
  return std::nullopt;
}

SeriesRecipe example_50000_recipe() {
  BrownProductRecipe product;
  product.factors.push_back(SeriesRecipe{ElementaryAbelianRecipe{2, 2}});
  product.factors.push_back(SeriesRecipe{ElementaryAbelianRecipe{5, 2}});
  product.factors.push_back(SeriesRecipe{LatticeRecipe{"(1 2 3 4 5)\n(1 2 3)\n", 5}});
  return SeriesRecipe{std::move(product)};
}

std::map<std::pair<int, int>, Integer> example_recurrence_coefficients(int i_max,
                                                                       int k_max) {
  if (i_max < 0 || k_max < 0) throw Error("recurrence grid must be nonnegative");
  std::map<std::pair<int, int>, Integer> c;
  auto at = [&c](int i, int k) -> Integer {
    if (i < 0 || k < 0) return 0;
    return c.at({i, k});
  };
  Integer pow2 = 2;  // 2^{i+1}
  for (int i = 0; i <= i_max; ++i, pow2 *= 2) {
    Integer pow5 = 5;  // 5^{k+1}
    for (int k = 0; k <= k_max; ++k, pow5 *= 5) {
      const Integer abelian_part = (pow2 - 1) * (pow5 - 1) / 4;
      c[{i, k}] = 5 * at(i, k - 1) + 10 * at(i - 1, k - 1) -
                  20 * at(i - 2, k - 1) + abelian_part;
    }
  }
  return c;
}

}  // namespace pzeta
