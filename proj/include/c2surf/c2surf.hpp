#pragma once

#include "bilinear.hpp"
#include "classifier.hpp"
#include "counting.hpp"
#include "dd.hpp"
#include "error.hpp"
#include "f2.hpp"
#include "gamma.hpp"
#include "gl2.hpp"
#include "isometry.hpp"
#include "orbits.hpp"
#include "rewrite.hpp"
#include "surface.hpp"
#include "word.hpp"
