#pragma once

#include "sector_tree.hpp"
#include "hepta_nav.hpp"
#include "tri_nav.hpp"
#include "ca_engine.hpp"
#include "rules.hpp"
#include "disc_geometry.hpp"
#include "svg_render.hpp"
#include "snapshot.hpp"
#include "analysis.hpp"
#include "validate.hpp"
