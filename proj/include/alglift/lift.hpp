#pragma once

#include "alglift/lift/almeida_molino.hpp"
#include "alglift/lift/de_rham.hpp"
#include "alglift/lift/lift_result.hpp"
#include "alglift/lift/verify.hpp"
