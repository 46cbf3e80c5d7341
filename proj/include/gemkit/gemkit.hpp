#pragma once

#include "gemkit/colored_graph.hpp"
#include "gemkit/residues.hpp"
#include "gemkit/permutations.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/integer_matrix.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/recognition.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/pi1.hpp"
#include "gemkit/trisection.hpp"
#include "gemkit/canonical.hpp"
#include "gemkit/constructions.hpp"
#include "gemkit/io.hpp"
#include "gemkit/catalog.hpp"
#include "gemkit/report.hpp"
