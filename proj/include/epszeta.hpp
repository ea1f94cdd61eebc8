#pragma once

#include "epszeta/carlson.hpp"
#include "epszeta/elastica.hpp"
#include "epszeta/elliptic.hpp"
#include "epszeta/epsilon_zeta.hpp"
#include "epszeta/errors.hpp"
#include "epszeta/extended_modulus.hpp"
#include "epszeta/quadrature.hpp"
#include "epszeta/version.hpp"
