#pragma once

// Core types and spectra
#include "dephasim/types.hpp"
#include "dephasim/mat2.hpp"
#include "dephasim/bath_spectrum.hpp"
#include "dephasim/pulse_sequence.hpp"

// Exact engines and weak-coupling formulas
#include "dephasim/spin_bath.hpp"
#include "dephasim/boson_bath.hpp"
#include "dephasim/master_eq.hpp"

// Validation oracles and analysis
#include "dephasim/oracles.hpp"
#include "dephasim/analysis.hpp"
#include "dephasim/validate.hpp"

// Configuration, orchestration, output
#include "dephasim/config.hpp"
#include "dephasim/run.hpp"
#include "dephasim/csv.hpp"
#include "dephasim/parallel.hpp"
