// Prints exact, first-order and higher-order values for a few large coefficients.

#include <cstdio>

#include "cgasym/exact.hpp"
#include "cgasym/first_order.hpp"
#include "cgasym/higher_order.hpp"

int main() {
  const char* points[] = {"200,100,300,150,400,250", "200,100,300.5,150.5,400.5,250.5", "200,150,300,-250,400,-100",
                          "200,150,300.5,-249.5,400.5,-99.5"};
  std::printf("%-37s %16s %16s %16s\n", "(j1,m1,j2,m2,j,m)", "exact", "first", "higher");
  for (const char* p : points) {
    const auto q = cgasym::parse_quantum_numbers(p);
    std::printf("%-37s %16.9e %16.9e %16.9e\n", cgasym::to_string(q).c_str(), cgasym::exact_value(q),
                cgasym::first_order(q), cgasym::higher_order(q));
  }
}
