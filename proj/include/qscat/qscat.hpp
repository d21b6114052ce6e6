#ifndef QSCAT_QSCAT_HPP
#define QSCAT_QSCAT_HPP

#include "qscat/bound.hpp"
#include "qscat/core.hpp"
#include "qscat/exact.hpp"
#include "qscat/potentials.hpp"
#include "qscat/presets.hpp"
#include "qscat/quadrature.hpp"
#include "qscat/resonance.hpp"
#include "qscat/specfun.hpp"
#include "qscat/sweep.hpp"
#include "qscat/table.hpp"
#include "qscat/wkb.hpp"

#endif  // QSCAT_QSCAT_HPP
