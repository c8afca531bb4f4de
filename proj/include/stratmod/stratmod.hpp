#pragma once

#include "stratmod/determinantal.hpp"
#include "stratmod/error.hpp"
#include "stratmod/ideal.hpp"
#include "stratmod/io.hpp"
#include "stratmod/kernel_coeffs.hpp"
#include "stratmod/kernel_limit.hpp"
#include "stratmod/partition.hpp"
#include "stratmod/peter_weyl.hpp"
#include "stratmod/polynomial.hpp"
#include "stratmod/rational.hpp"
