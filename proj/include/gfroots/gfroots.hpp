#ifndef GFROOTS_GFROOTS_HPP
#define GFROOTS_GFROOTS_HPP

#include "bench.hpp"
#include "chien.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "modulus.hpp"
#include "poly.hpp"

#endif
