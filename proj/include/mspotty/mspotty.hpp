#pragma once

#include "mspotty/bigint.hpp"
#include "mspotty/codes.hpp"
#include "mspotty/cyclotomic.hpp"
#include "mspotty/errors.hpp"
#include "mspotty/macwilliams.hpp"
#include "mspotty/poly.hpp"
#include "mspotty/rings.hpp"
#include "mspotty/weights.hpp"
