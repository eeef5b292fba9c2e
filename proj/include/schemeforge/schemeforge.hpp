#pragma once

#include "schemeforge/classify.hpp"
#include "schemeforge/io.hpp"
#include "schemeforge/presets.hpp"
