#pragma once

#include "torusvoa/combinatorics.hpp"
#include "torusvoa/io.hpp"
#include "torusvoa/lie_sl.hpp"
#include "torusvoa/link_invariants.hpp"
#include "torusvoa/qseries.hpp"
#include "torusvoa/rational.hpp"
#include "torusvoa/schur_spec.hpp"
#include "torusvoa/verifier.hpp"
#include "torusvoa/voa_characters.hpp"
