#include "facialthue/analysis.hpp"

#include <cmath>

namespace facialthue {

SignSequence sign_sequence(const Record& record) {
  const int t = static_cast<int>(record.size());
  SignSequence s;
  s.bits.reserve(2 * t);
  for (const auto& entry : record) {
    s.bits.push_back(1);
    if (entry)
      for (int i = 0; i < entry->h; ++i) s.bits.push_back(-1);
  }
  s.unpadded_length = static_cast<int>(s.bits.size());
  if (s.unpadded_length > 2 * t)
    fail(Errc::OverflowingRecord, "unpadded sign sequence has length " + std::to_string(s.unpadded_length) +
                                      " > 2t = " + std::to_string(2 * t));
  s.bits.resize(2 * t, 1);
  return s;
}

CountValue g_weight(std::span<const std::int8_t> bits) {
  CountValue w = 1;
  long run = 0;
  for (std::int8_t b : bits) {
    if (b == -1) {
      ++run;
    } else if (run) {
      w *= 4 * run;
      run = 0;
    }
  }
  if (run) w *= 4 * run;
  return w;
}

namespace {

inline std::uint64_t mask_weight(std::uint64_t mask, int n) {
  // bit i set = -1 at position i
  std::uint64_t w = 1;
  int run = 0;
  for (int i = 0; i < n; ++i) {
    if (mask >> i & 1) {
      ++run;
    } else if (run) {
      w *= static_cast<std::uint64_t>(4 * run);
      run = 0;
    }
  }
  if (run) w *= static_cast<std::uint64_t>(4 * run);
  return w;
}

void check_brute_range(int n) {
  if (n < 1 || n > 24)
    fail(Errc::NTooLarge, "brute-force enumeration limited to 1 <= n <= 24, got " + std::to_string(n));
}

}  // namespace

CountValue a_bruteforce(int n) {
  check_brute_range(n);
  const std::int64_t limit = std::int64_t{1} << n;
  std::uint64_t total = 0;  // a_24 ~ 5.6e12, far below 2^64
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t mask = 0; mask < limit; ++mask) total += mask_weight(static_cast<std::uint64_t>(mask), n);
  return CountValue(static_cast<unsigned long>(total));
}

CountValue a_bruteforce_serial(int n) {
  check_brute_range(n);
  const std::int64_t limit = std::int64_t{1} << n;
  std::uint64_t total = 0;
  for (std::int64_t mask = 0; mask < limit; ++mask) total += mask_weight(static_cast<std::uint64_t>(mask), n);
  return CountValue(static_cast<unsigned long>(total));
}

std::vector<CountValue> a_table(int n_max) {
  if (n_max < 1) fail(Errc::ParamOutOfRange, "n_max must be positive");
  std::vector<CountValue> a;
  a.reserve(n_max);
  a.push_back(5);
  if (n_max >= 2) a.push_back(17);
  if (n_max >= 3) a.push_back(57);
  for (int n = 4; n <= n_max; ++n) a.push_back(3 * a[n - 2] + a[n - 3] + a[n - 4]);
  return a;
}

CountValue a_recurrence(int n, RecurrenceForm form) {
  if (n < 1) fail(Errc::ParamOutOfRange, "n must be positive");
  if (form == RecurrenceForm::Compact) return a_table(n).back();

  // a_n = a_{n-1} + sum_{r=1}^{n-2} 4r a_{n-1-r} + 4(n-1) + 4n, a_1 = 5
  std::vector<CountValue> a{CountValue(5)};
  for (int i = 2; i <= n; ++i) {
    CountValue s = a[i - 2] + 4 * (i - 1) + 4 * i;
    for (int r = 1; r <= i - 2; ++r) s += 4 * r * a[i - 2 - r];
    a.push_back(s);
  }
  return a.back();
}

RootTriple cardano_roots() {
  const double v0 = std::cbrt(2.0 + (2.0 / 3.0) * std::sqrt(11.0 / 3.0));
  const double u0 = (4.0 / 3.0) / v0;

  RootTriple r;
  r.lambda0 = v0 + u0 + 1.0;
  r.lambda1 = {-(v0 + u0) / 2.0 + 1.0, (std::sqrt(3.0) / 2.0) * (v0 - u0)};
  r.lambda2 = std::conj(r.lambda1);

  auto p = [](std::complex<double> x) { return x * x * x - 3.0 * x * x - x - 1.0; };
  r.residuals = {std::abs(p(r.lambda0)), std::abs(p(r.lambda1)), std::abs(p(r.lambda2))};
  return r;
}

double log_count(const CountValue& value) {
  signed long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

GrowthEstimate growth_constant(int n_max) {
  if (n_max < 20) fail(Errc::ParamOutOfRange, "growth estimate needs n_max >= 20");
  const double log_lambda0 = std::log(cardano_roots().lambda0);
  const std::vector<CountValue> a = a_table(n_max);

  GrowthEstimate est;
  const int step = std::max(1, n_max / 8);
  for (int n = step; n <= n_max; n += step)
    est.history.push_back({n, std::exp(log_count(a[n - 1]) - n * log_lambda0)});
  if (est.history.empty() || est.history.back().first != n_max)
    est.history.push_back({n_max, std::exp(log_count(a[n_max - 1]) - n_max * log_lambda0)});
  est.c0 = est.history.back().second;
  return est;
}

long long threshold_steps(int m, int k) {
  if (m < 1) fail(Errc::ParamOutOfRange, "m must be positive");
  if (k <= 11)
    fail(Errc::KTooSmall, "k = " + std::to_string(k) +
                              " <= lambda0^2 ~ 11.445: a_{2t} eventually dominates k^t, no threshold exists");

  CountValue lhs_const;
  mpz_ui_pow_ui(lhs_const.get_mpz_t(), static_cast<unsigned long>(k + 1), static_cast<unsigned long>(m));

  // window holds a_{n-2}, a_{n-1}, a_n
  CountValue am2 = 5, am1 = 17, an = 57;
  int n = 3;
  CountValue k_pow = k;  // k^t
  for (long long t = 1;; ++t) {
    while (n < 2 * t) {
      CountValue next = 3 * an + am1 + am2;
      am2 = am1;
      am1 = an;
      an = next;
      ++n;
    }
    const CountValue& a_2t = (2 * t == n) ? an : am1;  // t = 1 hits a_2 = a_{n-1}
    if (lhs_const * a_2t < k_pow) return t;
    k_pow *= k;
    if (t > 1000000) fail(Errc::ParamOutOfRange, "threshold scan exceeded 10^6 steps");
  }
}

CountValue catalan_number(long t) {
  if (t < 1) fail(Errc::ParamOutOfRange, "t must be positive");
  CountValue binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * t), static_cast<unsigned long>(t));
  return binom / (t + 1);
}

double catalan_bound(long t) {
  return std::exp(t * std::log(4.0) - 0.5 * std::log(M_PI) - 1.5 * std::log(static_cast<double>(t)));
}

CatalanCheck catalan_check(long t) {
  CatalanCheck check{catalan_number(t), catalan_bound(t), false};
  const double log_bound = t * std::log(4.0) - 0.5 * std::log(M_PI) - 1.5 * std::log(static_cast<double>(t));
  check.holds = log_count(check.catalan) <= log_bound;
  return check;
}

std::vector<std::int8_t> complete_with_minus_ones(const SignSequence& s) {
  std::vector<std::int8_t> bits(s.unpadded().begin(), s.unpadded().end());
  bits.resize(s.bits.size(), -1);
  return bits;
}

bool dyck_prefix_feasible(std::span<const std::int8_t> bits) {
  long sum = 0;
  for (std::int8_t b : bits) {
    sum += b;
    if (sum < 0) return false;
  }
  return sum == 0;
}

}  // namespace facialthue
