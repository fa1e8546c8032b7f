#ifndef QLDS_QLDS_HPP
#define QLDS_QLDS_HPP

#include "complex_adjoint.hpp"
#include "cramer.hpp"
#include "determinant.hpp"
#include "drazin.hpp"
#include "eigen_normal.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "inner_product.hpp"
#include "io.hpp"
#include "lqds.hpp"
#include "matrix.hpp"
#include "matrix_exp.hpp"
#include "number_theory.hpp"
#include "ode_oracle.hpp"
#include "real_form.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "quaternion.hpp"
#include "scalar.hpp"
#include "scalar_ode.hpp"

#endif  // QLDS_QLDS_HPP
