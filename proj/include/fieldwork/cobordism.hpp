#pragma once

#include "fieldwork/cobordism/evaluate.hpp"
#include "fieldwork/cobordism/syntax.hpp"
#include "fieldwork/cobordism/typing.hpp"
