// Walks the exact pipeline end to end for a few small groups: irrep tables,
// low spectrum, and the first-eigenvalue rigidity case analysis.

#include <iostream>

#include "sprigid/commands.hpp"

int main() {
  using namespace sprigid;

  std::cout << render_text(cmd_tables(make_group(Family::C, 2)));
  std::cout << "\n" << render_text(cmd_spectrum(make_group(Family::C, 2), 6));
  for (int n = 2; n <= 4; ++n)
    std::cout << "\n" << render_text(cmd_uniqueness(make_group(Family::C, n)));
  std::cout << "\n" << render_text(cmd_scan(4));
  return 0;
}
