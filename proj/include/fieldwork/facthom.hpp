#pragma once

#include "fieldwork/facthom/circle.hpp"
#include "fieldwork/facthom/hochschild.hpp"
