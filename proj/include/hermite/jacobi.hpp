#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermite/cubic_field.hpp"
#include "hermite/root_engine.hpp"
#include "hermite/tcf.hpp"

namespace hermite {

struct AlgoState {
  std::size_t n = 0;
  FieldElem x;
  FieldElem y;
};

struct Cycle {
  std::size_t pre_period = 0;
  std::size_t period = 0;
};

// states[i] is (x_i, y_i); quotients[i] was read off states[i]. When a cycle
// is present, states.back() is the first repeated state and equals
// states[cycle->pre_period].
struct RunTranscript {
  std::vector<PartialQuotient> quotients;
  std::vector<AlgoState> states;
  std::optional<Cycle> cycle;
  bool finite = false;  // y_n - b_n vanished exactly

  // The quotients as a ternary continued fraction (periodic when a cycle
  // was found, finite otherwise).
  TernaryCF as_tcf() const;
};

// Modified algorithm started at (r/alpha, alpha):
//   a_n = f_map(x_n), b_n = g_map(y_n), x_{n+1} = 1/(y_n - b_n),
//   y_{n+1} = (x_n - a_n)/(y_n - b_n),
// except a_0 = z, which is emitted directly. Stops on the first exact state
// repetition or after max_steps quotients.
RunTranscript run_modified(const CubicPoly& f, const Integer& z, std::size_t max_steps);

// Classical Jacobi algorithm with certified floors at the root isolated by
// iv. Periodicity is not guaranteed; the transcript records what happens
// within max_steps.
RunTranscript run_classic(const FieldElem& x0, const FieldElem& y0, const IsolatingInterval& iv,
                          std::size_t max_steps = 1000);

struct RunComparison {
  IsolatingInterval root;
  RunTranscript modified;
  RunTranscript classic;
  // Per-convergent approximation error max(|A/C - r/alpha|, |B/C - alpha|);
  // nullopt where C_n = 0.
  std::vector<std::optional<double>> modified_errors;
  std::vector<std::optional<double>> classic_errors;
};

// Runs both algorithms from (r/alpha, alpha), alpha being the real root for
// which z is certified. Throws CertificateError when no real root qualifies.
RunComparison compare_runs(const CubicPoly& f, const Integer& z, std::size_t max_steps);

}  // namespace hermite
