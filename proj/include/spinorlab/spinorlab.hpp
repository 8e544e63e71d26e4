#pragma once

#include "core.hpp"
#include "clifford.hpp"
#include "spinor.hpp"
#include "bilinear.hpp"
#include "lounesto.hpp"
#include "rim.hpp"
#include "plane.hpp"
#include "homotopy.hpp"
#include "mdo.hpp"
#include "random.hpp"
#include "serialize.hpp"
#include "verify.hpp"
