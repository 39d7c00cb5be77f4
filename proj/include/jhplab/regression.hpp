#pragma once

#include "jhplab/monoid.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace jhplab {

struct RegressionOutcome {
    bool pass = false;
    std::string detail;
};

struct RegressionItem {
    std::string name;
    std::function<RegressionOutcome()> run;
};

struct RegressionOptions {
    // Replaces the displayed loop-algebra relations (e.g. a relation file under test).
    std::optional<Presentation> loop_presentation;
};

// Checks of the E_M shapes over A2, the non-cancellative examples and the
// counterexamples to (JHP) and unique length, in a fixed order.
std::vector<RegressionItem> regression_items(const RegressionOptions& options = {});

// Shape of E_M over A2 for M = N(m,n): atom count, stratum sizes up to grade
// 4(m+n) and the arrow pattern of the Cayley quiver up to 3(m+n).
RegressionOutcome check_a2_designated(int m, int n);

} // namespace jhplab
