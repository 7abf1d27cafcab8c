#pragma once

#include "equiseq/cadence.hpp"
#include "equiseq/convolution.hpp"
#include "equiseq/errors.hpp"
#include "equiseq/espm.hpp"
#include "equiseq/length3.hpp"
#include "equiseq/packed_bits.hpp"
#include "equiseq/subcadence.hpp"
#include "equiseq/text.hpp"
#include "equiseq/tuning.hpp"
