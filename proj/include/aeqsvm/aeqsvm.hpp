// Umbrella header.
#pragma once

#include "aeqsvm/dataset_io.hpp"
#include "aeqsvm/gqae.hpp"
#include "aeqsvm/linear_operator.hpp"
#include "aeqsvm/numeric.hpp"
#include "aeqsvm/qclassify.hpp"
#include "aeqsvm/qtrain.hpp"
#include "aeqsvm/random.hpp"
#include "aeqsvm/resources.hpp"
#include "aeqsvm/statevector.hpp"
#include "aeqsvm/svm.hpp"
#include "aeqsvm/verify.hpp"
