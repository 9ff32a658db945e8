#ifndef HYPERLAG_HYPERLAG_HPP
#define HYPERLAG_HYPERLAG_HPP

#include "hyperlag/vertex_set.hpp"
#include "hyperlag/hypergraph.hpp"
#include "hyperlag/operations.hpp"
#include "hyperlag/canonical.hpp"
#include "hyperlag/io.hpp"
#include "hyperlag/rational.hpp"
#include "hyperlag/rng.hpp"
#include "hyperlag/parallel.hpp"
#include "hyperlag/constructions.hpp"
#include "hyperlag/random.hpp"
#include "hyperlag/polynomial.hpp"
#include "hyperlag/lagrangian.hpp"
#include "hyperlag/density.hpp"
#include "hyperlag/search.hpp"
#include "hyperlag/envelopes.hpp"
#include "hyperlag/ledger.hpp"

#endif  // HYPERLAG_HYPERLAG_HPP
