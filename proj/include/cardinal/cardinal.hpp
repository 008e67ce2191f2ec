#pragma once

#include "cardinal/bernstein.hpp"
#include "cardinal/bspline.hpp"
#include "cardinal/euler_frobenius.hpp"
#include "cardinal/favard.hpp"
#include "cardinal/norms.hpp"
#include "cardinal/symbol.hpp"
