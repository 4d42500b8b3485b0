#pragma once

#include "compact.hpp"
#include "io.hpp"
#include "laws.hpp"
#include "spaces.hpp"
