#pragma once

#include <vector>

#include "monoclin/rational.hpp"
#include "monoclin/sparams.hpp"

namespace monoclin::fixtures {

/// Built-in dataset "table1": the twenty second-pattern search hits
/// [1/2, d/b, d/a, d/c] with their (b,a,c), the common numerator d, and the
/// rational parameter q that regenerates the row.
struct Table1Row {
  SParams s;
  Integer b, a, c, d;
  Rational q;
};

const std::vector<Table1Row>& table1();

/// Built-in dataset "table2": the sixteen search hits not matched by any
/// closed form here.
const std::vector<SParams>& table2();

/// Built-in dataset "acute18": the printed prefactors of the acute
/// sequences for s1 = 1/d, d = 2..19. Kept as literals so the closed-form
/// coefficient is tested against fixed data rather than against itself.
struct AcutePrefactor {
  int d;
  Rational coefficient;
};

const std::vector<AcutePrefactor>& acute18();

}  // namespace monoclin::fixtures
