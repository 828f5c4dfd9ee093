#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "facialthue/coloring.hpp"

namespace facialthue {

// Exact nonnegative integer; the counting sequences overflow 64 bits
// around n = 37.
using CountValue = mpz_class;

// +1/-1 sequence derived from a record: 1 per step, then h copies of -1
// for a cancelled repetition of size h, padded with 1's to length 2t.
struct SignSequence {
  std::vector<std::int8_t> bits;  // size 2t
  int unpadded_length = 0;

  std::span<const std::int8_t> unpadded() const {
    return {bits.data(), static_cast<size_t>(unpadded_length)};
  }
};

// Throws OverflowingRecord when the unpadded part exceeds 2t (impossible
// for genuine records).
SignSequence sign_sequence(const Record& record);

// Product of 4*(run length) over maximal runs of -1; 1 for all-ones.
CountValue g_weight(std::span<const std::int8_t> bits);

// Exact sum of g over all 2^n sign sequences. The parallel kernel and the
// serial reference must agree; both reject n outside [1,24] (NTooLarge).
CountValue a_bruteforce(int n);
CountValue a_bruteforce_serial(int n);

enum class RecurrenceForm { Compact, Convolution };

// a_1=5, a_2=17, a_3=57; compact: a_n = 3a_{n-1} + a_{n-2} + a_{n-3};
// convolution: a_n = a_{n-1} + sum_r 4r*a_{n-1-r} + 4(n-1) + 4n.
CountValue a_recurrence(int n, RecurrenceForm form);

// a_1..a_n via the compact recurrence.
std::vector<CountValue> a_table(int n_max);

struct RootTriple {
  double lambda0 = 0;
  std::complex<double> lambda1, lambda2;
  std::array<double, 3> residuals{};  // |p(lambda)| for the cubic x^3-3x^2-x-1
};

// Closed-form roots of the characteristic cubic via Cardano's formula.
RootTriple cardano_roots();

struct GrowthEstimate {
  double c0 = 0;                                  // final estimate a_n / lambda0^n
  std::vector<std::pair<int, double>> history;    // (n, estimate) checkpoints
};

// Numeric estimate of the growth constant with a convergence history.
GrowthEstimate growth_constant(int n_max);

// Smallest t with (k+1)^m * a_{2t} < k^t, by exact big-integer scan.
// Throws KTooSmall for k <= 11 (k must exceed lambda0^2 ~ 11.445).
long long threshold_steps(int m, int k);

CountValue catalan_number(long t);
double catalan_bound(long t);  // 4^t / (sqrt(pi) * t^(3/2))

struct CatalanCheck {
  CountValue catalan;
  double bound;
  bool holds;  // catalan <= bound, compared in log space
};

CatalanCheck catalan_check(long t);

// The unpadded part completed with -1's to length 2t: a Dyck word for
// genuine records.
std::vector<std::int8_t> complete_with_minus_ones(const SignSequence& s);
bool dyck_prefix_feasible(std::span<const std::int8_t> bits);

// Natural log of a positive big integer, exact mantissa + exponent based.
double log_count(const CountValue& value);

}  // namespace facialthue
