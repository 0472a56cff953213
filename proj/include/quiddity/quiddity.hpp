#pragma once

#include "quiddity/affine.hpp"
#include "quiddity/charseq.hpp"
#include "quiddity/cycles.hpp"
#include "quiddity/error.hpp"
#include "quiddity/localdesc.hpp"
#include "quiddity/scalar.hpp"
#include "quiddity/tables.hpp"
