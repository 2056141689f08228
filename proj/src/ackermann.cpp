#include "ackermann.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "errors.hpp"

namespace hopnav {
namespace {

using u64 = unsigned long long;

constexpr u64 SAT = kEvalCapMax;  // internal ceiling; value == SAT means ">= SAT"
constexpr int kMaxRowIndex = 60;

std::mutex cache_mu;  // guards the lazily grown row tables below

u64 sat_double(u64 n) { return n >= SAT / 2 ? SAT : 2 * n; }

u64 sat_pow2(u64 n) { return n >= 62 ? SAT : (1ull << n); }

u64 sat_square(u64 n) {
  if (n >= (1ull << 31)) return SAT;
  return std::min(n * n, SAT);
}

// 2^(2^n), the closed form of B(1,n).
u64 sat_tower2(u64 n) { return sat_pow2(sat_pow2(n)); }

void check_row_index(int k) {
  if (k < 0 || k > kMaxRowIndex)
    throw InputError("recurrence row index out of range [0, 60]");
}

// Rows with index >= first_cached are memoized as plain arrays. They blow up
// doubly-exponentially, so each array stays tiny (the extension loop stops as
// soon as a value reaches SAT, and rows are non-decreasing).
struct RowTable {
  std::vector<std::vector<u64>> rows;

  std::vector<u64>& row(int idx, std::vector<u64> seed) {
    if ((int)rows.size() <= idx) rows.resize(idx + 1);
    if (rows[idx].empty()) rows[idx] = std::move(seed);
    return rows[idx];
  }
};

RowTable a_rows;  // a_rows.rows[k-2] holds A(k, .)
RowTable b_rows;  // b_rows.rows[k-2] holds B(k, .)
RowTable t_rows;  // t_rows.rows[i-1] holds T(i, .)
RowTable p_rows;  // p_rows.rows[i-2] holds P(i, .)

u64 a_at(int k, u64 n);

u64 a_row_lookup(int k, u64 n) {
  auto& row = a_rows.row(k - 2, {1});  // A(k,0) = 1
  while (row.size() <= n && row.back() < SAT) row.push_back(a_at(k - 1, row.back()));
  if (n < row.size()) return row[n];
  return SAT;
}

u64 a_at(int k, u64 n) {
  if (k == 0) return sat_double(n);
  if (k == 1) return sat_pow2(n);
  return a_row_lookup(k, n);
}

u64 b_at(int k, u64 n);

u64 b_row_lookup(int k, u64 n) {
  auto& row = b_rows.row(k - 2, {2});  // B(k,0) = 2
  while (row.size() <= n && row.back() < SAT) row.push_back(b_at(k - 1, row.back()));
  if (n < row.size()) return row[n];
  return SAT;
}

u64 b_at(int k, u64 n) {
  if (k == 0) return sat_square(n);
  if (k == 1) return sat_tower2(n);
  return b_row_lookup(k, n);
}

u64 t_at(int i, u64 j);

u64 t_row_lookup(int i, u64 j) {
  auto& row = t_rows.row(i - 1, {0, 2});  // T(i,0) = 0, T(i,1) = 2
  while (row.size() <= j && row.back() < SAT) row.push_back(t_at(i - 1, row.back()));
  if (j < row.size()) return row[j];
  return SAT;
}

u64 t_at(int i, u64 j) {
  if (i == 0) return sat_double(j);
  return t_row_lookup(i, j);
}

u64 p_at(int i, u64 j);

u64 p_row_lookup(int i, u64 j) {
  auto& row = p_rows.row(i - 2, {p_at(i - 1, 1)});  // P(i,0) = P(i-1,1)
  while (row.size() <= j && row.back() < SAT)
    row.push_back(p_at(i - 1, sat_tower2(row.back())));
  if (j < row.size()) return row[j];
  return SAT;
}

u64 p_at(int i, u64 j) {
  if (i == 1) return sat_pow2(j);
  return p_row_lookup(i, j);
}

u64 ceil_log2(u64 n) {
  if (n <= 1) return 0;
  return 64 - std::countl_zero(n - 1);
}

u64 ceil_sqrt(u64 n) {
  if (n == 0) return 0;
  u64 s = (u64)std::max(0.0, std::floor(std::sqrt((double)n)) - 2);
  while (s * s < n) ++s;
  return s;
}

// min{ s : row[s] >= n } over a cached non-decreasing row.
u64 alpha_from_row(RowTable& table, int cache_idx, std::vector<u64> seed,
                   u64 (*next)(int, u64), int recur_idx, u64 n) {
  auto& row = table.row(cache_idx, std::move(seed));
  while (row.back() < n && row.back() < SAT) row.push_back(next(recur_idx - 1, row.back()));
  auto it = std::lower_bound(row.begin(), row.end(), n);
  if (it == row.end()) throw InternalError("inverse target above evaluation ceiling");
  return (u64)(it - row.begin());
}

u64 alpha_k_locked(int k, u64 n) {
  if (n <= 1) {
    // Rows that start at 0 (A row 0, B row 0) still satisfy row[0] >= 0 and
    // need one step to reach 1; every other row starts at >= 1.
    if (n == 0) return 0;
    return (k == 0 || k == 1) ? 1 : 0;
  }
  const bool family_a = (k % 2 == 0);
  const int r = family_a ? k / 2 : (k - 1) / 2;
  if (family_a) {
    if (r == 0) return (n + 1) / 2;
    if (r == 1) return ceil_log2(n);
    return alpha_from_row(a_rows, r - 2, {1}, &a_at, r, n);
  }
  if (r == 0) return ceil_sqrt(n);
  if (r == 1) return ceil_log2(std::max<u64>(ceil_log2(n), 1));
  return alpha_from_row(b_rows, r - 2, {2}, &b_at, r, n);
}

std::map<std::pair<int, u64>, u64> alpha_prime_memo;

u64 alpha_prime_locked(int k, u64 n) {
  if (k <= 1) return alpha_k_locked(k, n);
  if (n <= (u64)k + 1) return alpha_k_locked(k, n);
  auto key = std::make_pair(k, n);
  auto it = alpha_prime_memo.find(key);
  if (it != alpha_prime_memo.end()) return it->second;
  u64 inner = alpha_prime_locked(k - 2, n);
  if (inner >= n) throw InternalError("deviated inverse failed to contract");
  u64 res = 2 + alpha_prime_locked(k, inner);
  if (n <= (1ull << 22)) alpha_prime_memo.emplace(key, res);
  return res;
}

SatVal clamp_to_cap(u64 v, u64 cap) {
  if (v >= cap) return {cap, true};
  return {v, false};
}

void check_cap(u64 cap) {
  if (cap == 0 || cap > kEvalCapMax)
    throw InputError("evaluation cap must be in [1, 2^62]");
}

void check_n(u64 n) {
  if (n > kEvalCapMax) throw InputError("argument exceeds 2^62");
}

}  // namespace

SatVal eval_A(int k, unsigned long long n, unsigned long long cap) {
  check_row_index(k);
  check_cap(cap);
  check_n(n);
  std::lock_guard<std::mutex> lk(cache_mu);
  return clamp_to_cap(a_at(k, n), cap);
}

SatVal eval_B(int k, unsigned long long n, unsigned long long cap) {
  check_row_index(k);
  check_cap(cap);
  check_n(n);
  std::lock_guard<std::mutex> lk(cache_mu);
  return clamp_to_cap(b_at(k, n), cap);
}

SatVal eval_T(int i, unsigned long long j, unsigned long long cap) {
  check_row_index(i);
  check_cap(cap);
  check_n(j);
  std::lock_guard<std::mutex> lk(cache_mu);
  return clamp_to_cap(t_at(i, j), cap);
}

SatVal eval_P(int i, unsigned long long j, unsigned long long cap) {
  if (i < 1) throw InputError("P is defined for i >= 1");
  check_row_index(i);
  check_cap(cap);
  check_n(j);
  std::lock_guard<std::mutex> lk(cache_mu);
  return clamp_to_cap(p_at(i, j), cap);
}

unsigned long long alpha_k(int k, unsigned long long n) {
  check_row_index(k);
  check_n(n);
  std::lock_guard<std::mutex> lk(cache_mu);
  return alpha_k_locked(k, n);
}

unsigned long long alpha_prime(int k, unsigned long long n) {
  check_row_index(k);
  check_n(n);
  std::lock_guard<std::mutex> lk(cache_mu);
  return alpha_prime_locked(k, n);
}

unsigned long long alpha_inv(unsigned long long n) {
  check_n(n);
  std::lock_guard<std::mutex> lk(cache_mu);
  u64 s = 0;
  while (a_at((int)s, s) < n) {
    ++s;
    if (s > 64) throw InternalError("diagonal inverse runaway");
  }
  return s;
}

unsigned long long lambda_i(int i, unsigned long long n) {
  if (i < 1) throw InputError("lambda is defined for i >= 1");
  check_row_index(i);
  check_n(n);
  std::lock_guard<std::mutex> lk(cache_mu);
  if (n <= 1) return 0;  // P(i,0) >= 1 for every i >= 1
  if (i == 1) return ceil_log2(n);
  return alpha_from_row(p_rows, i - 2, {p_at(i - 1, 1)},
                        [](int prev, u64 v) { return p_at(prev, sat_tower2(v)); }, i, n);
}

}  // namespace hopnav
