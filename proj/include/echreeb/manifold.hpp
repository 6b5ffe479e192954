#pragma once

#include <string>
#include <vector>

namespace echreeb {

struct SpinCRecord {
  std::string name;
  long long c1_squared = 0;
};

// Closed 4-manifold bookkeeping for the dimension / parity layer.
struct ManifoldSummary {
  long long euler = 0;      // chi
  long long signature = 0;  // sigma
  long long b1 = 0;
  long long b2_plus = 1;
  long long n_untwisted = 0;
  long long n_twisted = 0;
  std::vector<SpinCRecord> spin_c;
};

// d = (c1^2 - 2 chi - 3 sigma) / 4; throws when the congruence mod 4 fails.
long long spin_c_dimension(long long euler, long long signature, long long c1_squared);

// Closed-case index c1(TX).A + A.A, which matches the spin-c dimension.
long long closed_case_index(long long c1_dot_A, long long A_dot_A);

enum class GateResult { proceed, vanish };

// Vanishing gate: any pairing E.A < -1 forces the invariant to zero.
GateResult gate_check(const std::vector<long long>& e_dot_a);

struct ParityAudit {
  bool untwisted_parity_ok = false;  // N_untwisted == 1 - b1 + b2+ (mod 2)
  int grading_parity = 0;            // parity of the concentrated grading = parity of I
  bool i_minus_p_even = true;        // when a loop count is supplied
  bool pass = false;
};

ParityAudit parity_audit(const ManifoldSummary& summary, long long ech_index_I,
                         long long loop_count = 0);

}  // namespace echreeb
