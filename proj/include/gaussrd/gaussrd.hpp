#ifndef GAUSSRD_GAUSSRD_HPP
#define GAUSSRD_GAUSSRD_HPP

#include "gaussrd/core.hpp"
#include "gaussrd/mmse.hpp"
#include "gaussrd/regions.hpp"
#include "gaussrd/oracles.hpp"
#include "gaussrd/test_channel.hpp"
#include "gaussrd/discrete.hpp"
#include "gaussrd/analysis.hpp"

#endif  // GAUSSRD_GAUSSRD_HPP
