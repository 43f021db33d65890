#pragma once

#include "eqschub/presentation_ring.hpp"

namespace eqschub {

enum class suite_kind { identities, pieri, engines, assoc, all };

std::string to_string(suite_kind s);
suite_kind suite_from_string(const std::string& s);

// Named check batteries for one shape:
//   identities - generic-sequence polynomial identities and the evaluation
//                vanishing table;
//   pieri      - ring products against the closed-form single-box rule;
//   engines    - h-model, e-model and peeling engines agree on every pair,
//                with homogeneous coefficients;
//   assoc      - commutativity on every pair and associativity on seeded
//                random triples;
//   all        - everything above.
check_report run_suite(const grassmann_shape& shape, suite_kind suite, int jobs);

} // namespace eqschub
