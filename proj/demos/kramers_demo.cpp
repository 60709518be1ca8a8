// Contrasts half-integer and integer spin: the metric Casimir of sp(1) has
// all-even eigenvalue clusters for spin 1/2, 3/2, 5/2 but not for spin 1.

#include <iostream>

#include "sprigid/commands.hpp"

int main() {
  using namespace sprigid;

  for (const char *j : {"1/2", "1", "3/2", "5/2"})
    std::cout << render_text(cmd_verify_parity(parse_rational(j), 25, 7)) << "\n";
  std::cout << render_text(cmd_verify_gss(2, 10, 7));
  return 0;
}
