#pragma once

#include "srk/catalog.hpp"
#include "srk/class_sum.hpp"
#include "srk/degeneration.hpp"
#include "srk/errors.hpp"
#include "srk/gr_index.hpp"
#include "srk/notation.hpp"
#include "srk/og_index.hpp"
#include "srk/quadric_diagram.hpp"
#include "srk/rigidity.hpp"
#include "srk/serialize.hpp"
#include "srk/verdict.hpp"
