#pragma once

// Umbrella header: closed-form engine, Fisher-information bounds, the
// truncated-Fock-space oracle, and the sweep/preset plumbing.

#include "su11/equivalence.hpp"
#include "su11/errors.hpp"
#include "su11/fock/basis.hpp"
#include "su11/fock/density.hpp"
#include "su11/fock/ops.hpp"
#include "su11/fock/oracle.hpp"
#include "su11/fock/state.hpp"
#include "su11/model.hpp"
#include "su11/multi_index.hpp"
#include "su11/params.hpp"
#include "su11/presets.hpp"
#include "su11/qfi.hpp"
#include "su11/series.hpp"
#include "su11/sweep.hpp"
#include "su11/w1.hpp"
