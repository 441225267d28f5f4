#include "pzeta/construct.hpp"

namespace pzeta {

namespace {

Index frontier_of(const DirichletSeries& inverse) {
  auto neg = first_negative(inverse);
  return neg ? neg->first - 1 : inverse.bound();
}

// Degree recorded for the seed: m for an alternating-flavoured seed, else 0.
std::int64_t seed_degree(const ChiefSignature& sig) {
  if (sig.alternating_degrees.size() == 1 && sig.abelian_primes.empty() &&
      sig.other_nonabelian_orders.empty())
    return *sig.alternating_degrees.begin();
  return 0;
}

}  // namespace

ConstructionState init_construction(const SeriesRecipe& seed, Index bound,
                                    const GroupLimits& limits,
                                    const LatticeProvider& provider) {
  RecipeEvaluation eval = evaluate_recipe(seed, bound, limits, provider);
  if (!eval.series.unital())
    throw Error("seed series is not unital");
  ConstructionState state;
  state.steps.push_back({seed_degree(eval.signature), 1});
  state.inverse = invert(eval.series);
  state.series = std::move(eval.series);
  state.bound = bound;
  state.frontier = frontier_of(state.inverse);
  return state;
}

ConstructionState construction_step(const ConstructionState& state) {
  const auto neg = first_negative(state.inverse);
  if (!neg) throw ConstructionComplete();
  const Index m = neg->first;
  const Integer& c = neg->second;

  if (m <= state.steps.back().degree)
    throw Error("first negative index does not exceed the last degree");
  if (m < 9 || m * (m - 1) < state.bound)
    throw BoundExhausted(
        "next degree " + std::to_string(m) +
        " has no certified series covering bound " + std::to_string(state.bound));
  if ((-c) % m != 0)
    throw DivisibilityError("coefficient " + to_decimal(c) + " at " +
                            std::to_string(m) +
                            " is not divisible by its index");

  const Integer f = (-c) / m;
  const DirichletSeries factor = boston_power_series(
      alternating_truncated_series(m, state.bound), f, factorial(m),
      factorial(m) / 2);

  ConstructionState next;
  next.steps = state.steps;
  next.steps.push_back({m, f});
  next.series = mul(state.series, factor);
  next.inverse = invert(next.series);
  next.bound = state.bound;

  if (next.inverse.coeff(m) != 0)
    throw Error("cancellation at " + std::to_string(m) +
                " did not produce zero (internal bug)");
  next.frontier = frontier_of(next.inverse);
  if (next.frontier < m || next.frontier < state.frontier)
    throw Error("frontier regressed (internal bug)");
  return next;
}

RunResult run_construction(const SeriesRecipe& seed, Index bound, int max_steps,
                           const GroupLimits& limits,
                           const LatticeProvider& provider) {
  if (max_steps < 0) throw Error("max_steps must be >= 0");
  RunResult result;
  result.state = init_construction(seed, bound, limits, provider);
  result.trace.push_back({1, result.state.steps[0].degree,
                          result.state.steps[0].multiplicity,
                          result.state.frontier});

  for (int k = 0; k < max_steps; ++k) {
    if (!first_negative(result.state.inverse)) {
      result.status = RunStatus::complete;
      return result;
    }
    try {
      result.state = construction_step(result.state);
    } catch (const BoundExhausted&) {
      result.status = RunStatus::bound_exhausted;
      return result;
    }
    const auto& step = result.state.steps.back();
    result.trace.push_back({static_cast<int>(result.state.steps.size()),
                            step.degree, step.multiplicity,
                            result.state.frontier});
  }
  result.status = first_negative(result.state.inverse)
                      ? RunStatus::max_steps
                      : RunStatus::complete;
  return result;
}

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::complete: return "complete";
    case RunStatus::bound_exhausted: return "bound-exhausted";
    case RunStatus::max_steps: return "max-steps";
  }
  return "unknown";
}

}  // namespace pzeta
