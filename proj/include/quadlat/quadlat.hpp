#pragma once

// Umbrella header.

#include "quadlat/bochner.hpp"
#include "quadlat/checks.hpp"
#include "quadlat/config.hpp"
#include "quadlat/errors.hpp"
#include "quadlat/family.hpp"
#include "quadlat/identities.hpp"
#include "quadlat/io.hpp"
#include "quadlat/lattice.hpp"
#include "quadlat/matrix.hpp"
#include "quadlat/racah.hpp"
#include "quadlat/rational.hpp"
#include "quadlat/report.hpp"
#include "quadlat/theta.hpp"
