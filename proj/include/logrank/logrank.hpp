#pragma once

#include "logrank/core/config.hpp"
#include "logrank/core/error.hpp"
#include "logrank/core/random.hpp"
#include "logrank/core/rational.hpp"

#include "logrank/f2core/f2set.hpp"
#include "logrank/f2core/f2vector.hpp"
#include "logrank/f2core/ops.hpp"
#include "logrank/f2core/set_io.hpp"
#include "logrank/f2core/spectrum.hpp"
#include "logrank/f2core/wht.hpp"

#include "logrank/boolmatrix/biased.hpp"
#include "logrank/boolmatrix/bool_matrix.hpp"
#include "logrank/boolmatrix/factorize.hpp"
#include "logrank/boolmatrix/matrix_io.hpp"
#include "logrank/boolmatrix/mono.hpp"
#include "logrank/boolmatrix/mono_via_dual.hpp"
#include "logrank/boolmatrix/rank.hpp"

#include "logrank/adcomb/bsg.hpp"
#include "logrank/adcomb/doubling.hpp"
#include "logrank/adcomb/pfr.hpp"

#include "logrank/approxdual/dual_pair.hpp"
#include "logrank/approxdual/exact_oracle.hpp"
#include "logrank/approxdual/greedy_dual.hpp"
#include "logrank/approxdual/pipeline.hpp"
#include "logrank/approxdual/pull_back.hpp"
#include "logrank/approxdual/sequence.hpp"
#include "logrank/approxdual/small_span.hpp"

#include "logrank/protocol/mono_finders.hpp"
#include "logrank/protocol/tree.hpp"
#include "logrank/protocol/tree_json.hpp"
#include "logrank/protocol/verify.hpp"
