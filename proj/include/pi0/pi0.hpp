#pragma once

// Component groups of real reductive groups from torus data.

#include "pi0/components.hpp"
#include "pi0/integer.hpp"
#include "pi0/lattice.hpp"
#include "pi0/matrix.hpp"
#include "pi0/normal_form.hpp"
#include "pi0/presets.hpp"
#include "pi0/quotient.hpp"
#include "pi0/real_form.hpp"
#include "pi0/root_datum.hpp"
