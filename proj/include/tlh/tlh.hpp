#pragma once

#include "tlh/errors.hpp"
#include "tlh/ring.hpp"
#include "tlh/json_io.hpp"
#include "tlh/render.hpp"
#include "tlh/sequences.hpp"
#include "tlh/recursion.hpp"
#include "tlh/links.hpp"
#include "tlh/fillings.hpp"
#include "tlh/known_values.hpp"
#include "tlh/checks.hpp"
