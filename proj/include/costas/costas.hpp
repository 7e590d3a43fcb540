#pragma once

#include "costas/numthy.hpp"
#include "costas/permutation.hpp"
#include "costas/xcorr.hpp"
#include "costas/arrays.hpp"
#include "costas/family_scan.hpp"
#include "costas/bounds.hpp"
#include "costas/report.hpp"
