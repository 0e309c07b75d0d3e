#pragma once

#include "types.hpp"
#include "report.hpp"
#include "relation.hpp"
#include "semigroup.hpp"
#include "conditions.hpp"
#include "partial_category.hpp"
#include "generators.hpp"
#include "esn.hpp"
#include "powerset.hpp"
#include "instances.hpp"
#include "corpus.hpp"
#include "io.hpp"
