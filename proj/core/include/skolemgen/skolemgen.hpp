#pragma once

#include "skolemgen/compact_state.hpp"
#include "skolemgen/engine.hpp"
#include "skolemgen/open_state.hpp"
#include "skolemgen/oracle.hpp"
#include "skolemgen/sequence.hpp"
#include "skolemgen/sts.hpp"
#include "skolemgen/succession.hpp"
#include "skolemgen/text.hpp"
