#pragma once

#include "nwforest/decompose.hpp"
#include "nwforest/graph.hpp"
#include "nwforest/io.hpp"
#include "nwforest/oracle.hpp"
#include "nwforest/preassign.hpp"
