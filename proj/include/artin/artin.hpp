#pragma once

#include "artin/bestvina_tree.hpp"
#include "artin/curvature_audit.hpp"
#include "artin/dihedral_garside.hpp"
#include "artin/dihedral_oracle.hpp"
#include "artin/error.hpp"
#include "artin/graph_core.hpp"
#include "artin/graph_topology.hpp"
#include "artin/report.hpp"
#include "artin/rigidity.hpp"
#include "artin/word.hpp"
