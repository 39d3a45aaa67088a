#ifndef AWFT_AWFT_HPP
#define AWFT_AWFT_HPP

#include "awft/errors.hpp"
#include "awft/numeric.hpp"
#include "awft/qseries.hpp"
#include "awft/params.hpp"
#include "awft/awfunction.hpp"
#include "awft/measure.hpp"
#include "awft/transform.hpp"
#include "awft/verification.hpp"
#include "awft/io.hpp"

#endif  // AWFT_AWFT_HPP
