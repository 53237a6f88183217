#pragma once

#include "alglift/equivariant/deck_lift.hpp"
#include "alglift/equivariant/group_action.hpp"
