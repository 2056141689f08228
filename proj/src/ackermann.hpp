#pragma once
#include <cstdint>

namespace hopnav {

// Result of a saturating evaluation. sat means the true value is >= the cap
// that was passed in; v then holds the cap itself, so a saturated result
// compares greater-or-equal against any quantity the caller saturates at.
struct SatVal {
  unsigned long long v = 0;
  bool sat = false;
};

// Absolute ceiling for all internal arithmetic; caps above this are rejected.
inline constexpr unsigned long long kEvalCapMax = 1ull << 62;

// A(0,n) = 2n, A(k,0) = 1, A(k,n) = A(k-1, A(k,n-1)).
SatVal eval_A(int k, unsigned long long n, unsigned long long cap);

// B(0,n) = n^2, B(k,0) = 2, B(k,n) = B(k-1, B(k,n-1)).
SatVal eval_B(int k, unsigned long long n, unsigned long long cap);

// T(0,j) = 2j, T(i,0) = 0, T(i,1) = 2, T(i,j) = T(i-1, T(i,j-1)).
// Agrees with A(i,j) for all j >= 1.
SatVal eval_T(int i, unsigned long long j, unsigned long long cap);

// P(1,j) = 2^j, P(i,0) = P(i-1,1), P(i,j) = P(i-1, 2^(2^P(i,j-1))), i >= 1.
SatVal eval_P(int i, unsigned long long j, unsigned long long cap);

// Inverse hierarchy indexed by a single parameter:
//   alpha_{2k}(n)   = min{ s >= 0 : A(k,s) >= n }
//   alpha_{2k+1}(n) = min{ s >= 0 : B(k,s) >= n }
// so alpha_0(n) = ceil(n/2), alpha_1 = ceil(sqrt n), alpha_2 = ceil(log2 n),
// alpha_3 = ceil(log2 log2 n), alpha_4 = log*.
unsigned long long alpha_k(int k, unsigned long long n);

// Deviated inverses used to size the construction:
//   alpha'_0 = alpha_0, alpha'_1 = alpha_1,
//   alpha'_k(n) = alpha_k(n)              for k >= 2, n <= k+1,
//   alpha'_k(n) = 2 + alpha'_k(alpha'_{k-2}(n))  for k >= 2, n >= k+2.
// Satisfies alpha_k(n) <= alpha'_k(n) <= 2*alpha_k(n) + 4.
unsigned long long alpha_prime(int k, unsigned long long n);

// Diagonal inverse: min{ s >= 0 : A(s,s) >= n }. A(0,0) = 0, so the inverse
// of 0 is 0; A(1,1) = 2 makes the inverse of both 1 and 2 equal to 1.
unsigned long long alpha_inv(unsigned long long n);

// lambda_i(n) = min{ j >= 0 : P(i,j) >= n }, defined for i >= 1.
unsigned long long lambda_i(int i, unsigned long long n);

}
