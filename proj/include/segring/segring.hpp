#pragma once

// Exact combinatorial engine for segments of cuspidal representations of
// GL(n) over a p-adic division algebra: the graded commutative ring R of
// standard-module classes, its Jacquet-module comultiplication, the Casselman
// square-integrability test, pair composition series, and a verification
// harness replaying the engine's defining identities over enumerated windows.

#include "segring/config.hpp"
#include "segring/criteria.hpp"
#include "segring/errors.hpp"
#include "segring/expr.hpp"
#include "segring/format.hpp"
#include "segring/harness.hpp"
#include "segring/hopf.hpp"
#include "segring/lines.hpp"
#include "segring/multisegment.hpp"
#include "segring/rational.hpp"
#include "segring/ring.hpp"
#include "segring/segment.hpp"
#include "segring/structure.hpp"
