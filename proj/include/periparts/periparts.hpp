#ifndef PERIPARTS_PERIPARTS_HPP
#define PERIPARTS_PERIPARTS_HPP

#include "periparts/bigint.hpp"
#include "periparts/bijections.hpp"
#include "periparts/counting.hpp"
#include "periparts/enumerate.hpp"
#include "periparts/format.hpp"
#include "periparts/partition.hpp"
#include "periparts/polynomial.hpp"
#include "periparts/series.hpp"
#include "periparts/verify.hpp"

#endif
