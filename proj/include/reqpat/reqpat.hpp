#pragma once

#include "reqpat/clock.hpp"
#include "reqpat/commands.hpp"
#include "reqpat/condition.hpp"
#include "reqpat/emit.hpp"
#include "reqpat/error.hpp"
#include "reqpat/harness.hpp"
#include "reqpat/ltl.hpp"
#include "reqpat/pattern.hpp"
#include "reqpat/picnic.hpp"
#include "reqpat/semantics.hpp"
#include "reqpat/state.hpp"
#include "reqpat/suite.hpp"
