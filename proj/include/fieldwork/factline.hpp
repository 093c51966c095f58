#pragma once

#include "fieldwork/factline/intervals.hpp"
#include "fieldwork/factline/line_algebra.hpp"
