#pragma once

#include "alglift/error.hpp"
#include "alglift/exact/knumber.hpp"
#include "alglift/exact/lattice.hpp"
#include "alglift/exact/matrix.hpp"
#include "alglift/exact/normal_form.hpp"
#include "alglift/exact/polynomial.hpp"
#include "alglift/exact/rational.hpp"
#include "alglift/exact/symbols.hpp"
