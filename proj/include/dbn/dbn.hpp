#ifndef DBN_DBN_HPP
#define DBN_DBN_HPP

#include "dbn/character.hpp"
#include "dbn/classical_zeta.hpp"
#include "dbn/families.hpp"
#include "dbn/finite_field.hpp"
#include "dbn/good_pair.hpp"
#include "dbn/lfunction.hpp"
#include "dbn/newman.hpp"
#include "dbn/polynomial.hpp"
#include "dbn/reference_table.hpp"
#include "dbn/roots.hpp"

#endif  // DBN_DBN_HPP
