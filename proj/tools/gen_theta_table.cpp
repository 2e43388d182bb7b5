// Prints the theta base table (src/theta_table.inc) from oracle homology.
#include <cstdio>

#include "khoform/families.hpp"
#include "khoform/oracle.hpp"

int main() {
  using namespace khoform;
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 2; ++n2)
      for (int n3 = 1; n3 <= 3; ++n3) {
        auto p = oracle_profile(theta_graph(n1, n2, n3));
        if (p.has_torsion()) return 1;
        int dims[2] = {-2, -2};
        int count = 0;
        for (auto it = p.groups.rbegin(); it != p.groups.rend(); ++it)
          for (long long r = 0; r < it->second.rank; ++r) {
            if (count == 2) return 1;
            dims[count++] = it->first;
          }
        std::printf("    {%d, %d, %d, {%d, %d}, %d},\n", n1, n2, n3, dims[0], dims[1],
                    count == 0 ? -1 : count);
      }
  return 0;
}
