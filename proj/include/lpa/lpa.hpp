#pragma once

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/gmatrix.hpp"
#include "lpa/graph.hpp"
#include "lpa/laurent.hpp"
#include "lpa/linalg.hpp"
#include "lpa/matrix.hpp"
#include "lpa/regularity.hpp"
#include "lpa/sampling.hpp"
#include "lpa/scalar.hpp"
#include "lpa/serialize.hpp"
#include "lpa/smith.hpp"
#include "lpa/structure.hpp"
