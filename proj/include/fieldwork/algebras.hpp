#pragma once

#include "fieldwork/algebras/catalog.hpp"
#include "fieldwork/algebras/enveloping.hpp"
#include "fieldwork/algebras/frobenius.hpp"
#include "fieldwork/algebras/lie.hpp"
#include "fieldwork/algebras/structure_algebra.hpp"
