#pragma once

#include "alglift/complex/chain_complex.hpp"
#include "alglift/complex/cochain.hpp"
#include "alglift/complex/homology.hpp"
#include "alglift/complex/simplicial.hpp"
