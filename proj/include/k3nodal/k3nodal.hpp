#pragma once

#include "k3nodal/errors.hpp"
#include "k3nodal/gf2/bit_vector.hpp"
#include "k3nodal/gf2/matrix.hpp"
#include "k3nodal/codes/linear_code.hpp"
#include "k3nodal/codes/reed_muller.hpp"
#include "k3nodal/codes/equivalence.hpp"
#include "k3nodal/codes/beauville.hpp"
#include "k3nodal/codes/no_extension.hpp"
#include "k3nodal/lattice/integer_matrix.hpp"
#include "k3nodal/lattice/code_lattice.hpp"
#include "k3nodal/k3/even_sets.hpp"
#include "k3nodal/k3/duval.hpp"
#include "k3nodal/k3/theorem.hpp"
