#pragma once

#include "incircle/core.hpp"
#include "incircle/tangents.hpp"
#include "incircle/radius.hpp"
#include "incircle/geometry.hpp"
#include "incircle/bicentric.hpp"
