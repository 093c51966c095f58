#pragma once

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/chain_complex.hpp"
#include "fieldwork/exactcore/group_action.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/exactcore/matrix.hpp"
#include "fieldwork/exactcore/rational.hpp"
#include "fieldwork/exactcore/sparse.hpp"
