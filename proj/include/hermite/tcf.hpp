#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermite/matrix3.hpp"
#include "hermite/rational.hpp"

namespace hermite {

struct PartialQuotient {
  Rat a;  // first component
  Rat b;  // second component

  friend bool operator==(const PartialQuotient&, const PartialQuotient&) = default;
};

// Ternary continued fraction [{a_0, a_1, ...}, {b_0, b_1, ...}] given as a
// pre-period followed by a repeating period. An empty period means the
// expansion is finite.
struct TernaryCF {
  std::vector<PartialQuotient> pre_period;
  std::vector<PartialQuotient> period;

  bool is_finite() const { return period.empty(); }
  bool has_index(std::size_t n) const { return !is_finite() || n < pre_period.size(); }
  // Throws std::out_of_range past the end of a finite expansion.
  const PartialQuotient& operator[](std::size_t n) const;

  friend bool operator==(const TernaryCF&, const TernaryCF&) = default;
};

// Numerators A, B and common denominator C of the n-th convergent pair.
struct ConvergentTriple {
  std::size_t n = 0;
  Rat A;
  Rat B;
  Rat C;
};

// X_n = a_n X_{n-1} + b_n X_{n-2} + X_{n-3} with
//   (A_{-2}, A_{-1}) = (0, 1), (B_{-2}, B_{-1}) = (1, 0), (C_{-2}, C_{-1}) = (0, 0)
// and (A_0, B_0, C_0) = (a_0, b_0, 1). These initial values are the ones
// consistent with the matrix product form below: the three back-states
// X_{-1}, X_{-2}, X_{-3} are the columns of the identity.
class ConvergentStream {
 public:
  explicit ConvergentStream(const TernaryCF& t) : t_(&t) {}

  bool done() const { return !t_->has_index(next_); }
  const ConvergentTriple& next();

 private:
  const TernaryCF* t_;
  std::size_t next_ = 0;
  ConvergentTriple back1_{0, 1, 0, 0};  // X_{n-1}
  ConvergentTriple back2_{0, 0, 1, 0};  // X_{n-2}
  ConvergentTriple back3_{0, 0, 0, 1};  // X_{n-3}
};

std::vector<ConvergentTriple> convergents(const TernaryCF& t, std::size_t n_max);

// [[a, 1, 0], [b, 0, 1], [1, 0, 0]]
Mat3<Rat> step_matrix(const PartialQuotient& pq);

// Product of step matrices 0..n; its columns are the triples of indices
// n, n-1, n-2.
Mat3<Rat> matrix_form(const TernaryCF& t, std::size_t n);

// For a = a'/b', b = c'/d' in lowest terms:
// [[a'd', b'd', 0], [c'b', 0, b'd'], [b'd', 0, 0]] = b'd' * step_matrix.
Mat3<Integer> integer_step_matrix(const PartialQuotient& pq);

// Scaled column sequences of the integer matrix product, with
//   A_n/C_n = s_n / (b_0 d_1 s''_n),   B_n/C_n = s'_n / (d_0 s''_n),
// where b_i, d_i are the denominators of a_i, b_i.
struct SSequences {
  std::vector<Rat> s;
  std::vector<Rat> s_prime;
  std::vector<Rat> s_second;
  std::vector<Integer> first_den;   // b_i
  std::vector<Integer> second_den;  // d_i

  // Returns nullopt where s''_n = 0.
  std::optional<Rat> first_ratio(std::size_t n) const;
  std::optional<Rat> second_ratio(std::size_t n) const;
};

struct IntegerMatrixForm {
  std::vector<Mat3<Integer>> steps;
  Mat3<Integer> product;
  SSequences sequences;
};

IntegerMatrixForm integer_matrix_form(const TernaryCF& t, std::size_t n);

struct Evaluation {
  Rat first;
  Rat second;
  Rat delta;              // max component change between the last two usable convergents
  std::size_t index = 0;  // index of the returned convergent
  bool converged = false;
};

// Walks the convergents (skipping C_n = 0) until both components move by
// less than `tol` or `n_cap` is reached. Finite expansions evaluate exactly.
Evaluation evaluate(const TernaryCF& t, const Rat& tol, std::size_t n_cap);

// For t of shape (2, 3) converging to (x, y) the result converges to
// (rho x, y / rho); the identity holds convergent by convergent.
TernaryCF scale_transform(const TernaryCF& t, const Rat& rho);

}  // namespace hermite
