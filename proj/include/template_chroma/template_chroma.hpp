#pragma once

#include "template_chroma/budget.hpp"
#include "template_chroma/cardinals.hpp"
#include "template_chroma/coloring.hpp"
#include "template_chroma/distinguishers.hpp"
#include "template_chroma/embeddings.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/hypergraph.hpp"
#include "template_chroma/partitions.hpp"
#include "template_chroma/polynomials.hpp"
#include "template_chroma/rational.hpp"
#include "template_chroma/shift_coloring.hpp"
#include "template_chroma/symbolic_chromatic.hpp"
#include "template_chroma/templates.hpp"
