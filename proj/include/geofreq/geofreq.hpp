#pragma once

#include "geofreq/asymptotics.hpp"
#include "geofreq/exactmath.hpp"
#include "geofreq/experiments.hpp"
#include "geofreq/io.hpp"
#include "geofreq/log_real.hpp"
#include "geofreq/rational.hpp"
#include "geofreq/real.hpp"
#include "geofreq/surface.hpp"
#include "geofreq/verification.hpp"
#include "geofreq/volumes.hpp"
