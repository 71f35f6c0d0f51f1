#pragma once

#include "hyperclifford/errors.hpp"
#include "hyperclifford/scalar.hpp"
#include "hyperclifford/matrix.hpp"
#include "hyperclifford/pauli.hpp"
#include "hyperclifford/clifford.hpp"
#include "hyperclifford/paravector.hpp"
#include "hyperclifford/rotor.hpp"
#include "hyperclifford/physics.hpp"
#include "hyperclifford/report.hpp"
#include "hyperclifford/verify.hpp"
