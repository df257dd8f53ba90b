#pragma once

#include "mfc/bigraded.hpp"
#include "mfc/decomposition.hpp"
#include "mfc/digraph_cycles.hpp"
#include "mfc/errors.hpp"
#include "mfc/f2_rank.hpp"
#include "mfc/face_poset.hpp"
#include "mfc/graph_cycles.hpp"
#include "mfc/homology.hpp"
#include "mfc/matching.hpp"
#include "mfc/options.hpp"
#include "mfc/simplicial_complex.hpp"
#include "mfc/smith.hpp"
#include "mfc/sparse_matrix.hpp"
#include "mfc/subcomplexes.hpp"
