#pragma once

#include <cstdint>
#include <vector>

#include "pzeta/catalog.hpp"
#include "pzeta/dseries.hpp"
#include "pzeta/error.hpp"
#include "pzeta/integer.hpp"

namespace pzeta {

/// Raised by construction_step when the inverse has no negative coefficient
/// left within the bound: the construction is finished.
class ConstructionComplete : public Error {
 public:
  ConstructionComplete() : Error("construction complete: no negative coefficient") {}
};

/// Raised when the next factor cannot be certified within the working bound
/// (degree below 9 or validity range m(m-1) short of the bound).
class BoundExhausted : public Error {
 public:
  using Error::Error;
};

/// Raised when the first negative coefficient is not divisible by its index.
/// For the perfect products built here that would falsify either the series
/// or the perfectness assumption, so it is surfaced loudly.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

struct ConstructionStep {
  std::int64_t degree = 0;  // m_k; 0 when the seed is not alternating
  Integer multiplicity = 1;  // f_k
};

/// One snapshot of the iterative cancellation procedure: multiply in
/// truncated alternating powers so that the first negative inverse
/// coefficient is cancelled to exactly zero. Snapshots are immutable;
/// stepping returns a new state.
struct ConstructionState {
  std::vector<ConstructionStep> steps;
  DirichletSeries series;
  DirichletSeries inverse;
  Index bound = 1;
  Index frontier = 1;  // nonnegativity of the inverse certified up to here
};

ConstructionState init_construction(const SeriesRecipe& seed, Index bound,
                                    const GroupLimits& limits = {},
                                    const LatticeProvider& provider = {});

/// Appends the factor A_m^f with m the first negative index and f = -c_m/m.
/// Throws ConstructionComplete, BoundExhausted or DivisibilityError.
ConstructionState construction_step(const ConstructionState& state);

enum class RunStatus {
  complete,         // no negative coefficient remains within the bound
  bound_exhausted,  // next step cannot be certified at this truncation
  max_steps,        // step budget used up with negatives remaining
};

struct TraceEntry {
  int k = 0;
  std::int64_t degree = 0;
  Integer multiplicity = 1;
  Index frontier = 1;
};

struct RunResult {
  ConstructionState state;
  std::vector<TraceEntry> trace;
  RunStatus status = RunStatus::complete;
};

/// Runs init + steps until complete, bound-exhausted or max_steps. The trace
/// has one entry per state, starting with the seed as k = 1.
RunResult run_construction(const SeriesRecipe& seed, Index bound, int max_steps,
                           const GroupLimits& limits = {},
                           const LatticeProvider& provider = {});

const char* to_string(RunStatus status);

}  // namespace pzeta
