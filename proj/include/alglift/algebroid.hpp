#pragma once

#include "alglift/algebroid/monodromy.hpp"
#include "alglift/algebroid/presentation.hpp"
