#pragma once

// Umbrella header: the finite-set category toolkit.

#include "setcat/cancellation.hpp"
#include "setcat/constructions.hpp"
#include "setcat/dsl.hpp"
#include "setcat/errors.hpp"
#include "setcat/function.hpp"
#include "setcat/label.hpp"
#include "setcat/partition.hpp"
#include "setcat/pointed.hpp"
#include "setcat/rational.hpp"
#include "setcat/relation.hpp"
#include "setcat/subset.hpp"
