#pragma once

#include "qpknot/braids.hpp"
#include "qpknot/construct.hpp"
#include "qpknot/diagram.hpp"
#include "qpknot/embedding.hpp"
#include "qpknot/error.hpp"
#include "qpknot/generators.hpp"
#include "qpknot/graph.hpp"
#include "qpknot/graph_index.hpp"
#include "qpknot/homfly.hpp"
#include "qpknot/laurent.hpp"
#include "qpknot/seifert.hpp"
#include "qpknot/theorems.hpp"
#include "qpknot/vogel.hpp"
