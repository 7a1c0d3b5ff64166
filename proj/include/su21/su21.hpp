#pragma once

#include "su21/algebra.hpp"
#include "su21/classifier.hpp"
#include "su21/coefficients.hpp"
#include "su21/errors.hpp"
#include "su21/exact_scalar.hpp"
#include "su21/ktype.hpp"
#include "su21/module.hpp"
#include "su21/render.hpp"
#include "su21/sl2.hpp"
#include "su21/unitarity.hpp"
#include "su21/verifier.hpp"
