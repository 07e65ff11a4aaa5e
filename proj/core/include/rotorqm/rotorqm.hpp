#pragma once

#include "rotorqm/classical.hpp"
#include "rotorqm/constants.hpp"
#include "rotorqm/cylinder.hpp"
#include "rotorqm/error.hpp"
#include "rotorqm/precision.hpp"
#include "rotorqm/serialize.hpp"
#include "rotorqm/shell.hpp"
#include "rotorqm/specfun.hpp"
#include "rotorqm/spectrum.hpp"
#include "rotorqm/types.hpp"
