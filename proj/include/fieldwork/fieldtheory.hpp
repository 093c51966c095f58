#pragma once

#include "fieldwork/fieldtheory/critical_locus.hpp"
#include "fieldwork/fieldtheory/poisson.hpp"
#include "fieldwork/fieldtheory/polynomial.hpp"
#include "fieldwork/fieldtheory/weyl.hpp"
