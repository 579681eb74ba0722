#pragma once

#include "rdc/acyclicity.hpp"
#include "rdc/chain.hpp"
#include "rdc/constructions.hpp"
#include "rdc/flow.hpp"
#include "rdc/graph.hpp"
#include "rdc/io.hpp"
#include "rdc/molecule.hpp"
#include "rdc/ogposet.hpp"
#include "rdc/omega.hpp"
