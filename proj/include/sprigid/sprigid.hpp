#pragma once

#include "sprigid/rational.hpp"
#include "sprigid/root_system.hpp"
#include "sprigid/irreps.hpp"
#include "sprigid/spectrum.hpp"
#include "sprigid/obstruction.hpp"
#include "sprigid/numeric_lab.hpp"
#include "sprigid/report.hpp"
#include "sprigid/version.hpp"
