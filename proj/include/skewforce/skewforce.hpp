#ifndef SKEWFORCE_SKEWFORCE_HPP
#define SKEWFORCE_SKEWFORCE_HPP

#include "skewforce/completeness.hpp"
#include "skewforce/errors.hpp"
#include "skewforce/exact/kernel.hpp"
#include "skewforce/exact/matrix.hpp"
#include "skewforce/exact/multilinear.hpp"
#include "skewforce/exact/rational.hpp"
#include "skewforce/family.hpp"
#include "skewforce/forcing.hpp"
#include "skewforce/generate.hpp"
#include "skewforce/graph.hpp"
#include "skewforce/hypergraph.hpp"
#include "skewforce/hypernull.hpp"
#include "skewforce/matching.hpp"
#include "skewforce/matroid.hpp"
#include "skewforce/surgery.hpp"
#include "skewforce/validate.hpp"
#include "skewforce/vertex_set.hpp"

#endif // SKEWFORCE_SKEWFORCE_HPP
