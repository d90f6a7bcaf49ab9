#pragma once

#include "qfock/errors.hpp"
#include "qfock/fock.hpp"
#include "qfock/fock_vector.hpp"
#include "qfock/mixing.hpp"
#include "qfock/ops.hpp"
#include "qfock/rational.hpp"
#include "qfock/sampling.hpp"
#include "qfock/scalar.hpp"
#include "qfock/word.hpp"
