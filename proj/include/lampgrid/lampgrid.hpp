#pragma once

#include "lampgrid/grid.hpp"
#include "lampgrid/press.hpp"
#include "lampgrid/element.hpp"
#include "lampgrid/hexagon.hpp"
#include "lampgrid/words.hpp"
#include "lampgrid/trapezoid.hpp"
#include "lampgrid/gf2.hpp"
#include "lampgrid/witness.hpp"
#include "lampgrid/tour.hpp"
#include "lampgrid/search.hpp"
#include "lampgrid/depth.hpp"
#include "lampgrid/render.hpp"
