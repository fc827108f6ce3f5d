#pragma once

#include "hornsat/errors.hpp"
#include "hornsat/schubert.hpp"
#include "hornsat/lr.hpp"
#include "hornsat/horn_criterion.hpp"
#include "hornsat/modular.hpp"
#include "hornsat/probe.hpp"
#include "hornsat/parabolic.hpp"
#include "hornsat/pointcount.hpp"
