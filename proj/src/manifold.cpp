#include "echreeb/manifold.hpp"

#include <sstream>
#include <stdexcept>

namespace echreeb {

namespace {
long long mod(long long a, long long m) { return ((a % m) + m) % m; }
}  // namespace

long long spin_c_dimension(long long euler, long long signature, long long c1_squared) {
  const long long num = c1_squared - 2 * euler - 3 * signature;
  if (mod(num, 4) != 0) {
    std::ostringstream os;
    os << "spin_c_dimension: c1^2 = " << c1_squared << " violates the congruence c1^2 = 2 chi + 3 sigma (mod 4)";
    throw std::domain_error(os.str());
  }
  return num / 4;
}

long long closed_case_index(long long c1_dot_A, long long A_dot_A) { return c1_dot_A + A_dot_A; }

GateResult gate_check(const std::vector<long long>& e_dot_a) {
  for (long long v : e_dot_a)
    if (v < -1) return GateResult::vanish;
  return GateResult::proceed;
}

ParityAudit parity_audit(const ManifoldSummary& summary, long long ech_index_I, long long loop_count) {
  ParityAudit audit;
  audit.untwisted_parity_ok =
      mod(summary.n_untwisted, 2) == mod(1 - summary.b1 + summary.b2_plus, 2);
  audit.grading_parity = static_cast<int>(mod(ech_index_I, 2));
  audit.i_minus_p_even = mod(ech_index_I - loop_count, 2) == 0;
  audit.pass = audit.untwisted_parity_ok && audit.i_minus_p_even;
  return audit;
}

}  // namespace echreeb
