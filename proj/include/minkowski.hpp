#pragma once

// Everything except the command-line front end (minkowski/cli.hpp), which pulls in CLI11.

#include "minkowski/acceptance.hpp"
#include "minkowski/bounds.hpp"
#include "minkowski/certificate.hpp"
#include "minkowski/cyclotomic.hpp"
#include "minkowski/errors.hpp"
#include "minkowski/exactnum.hpp"
#include "minkowski/finfield.hpp"
#include "minkowski/groupfile.hpp"
#include "minkowski/lattice.hpp"
#include "minkowski/matgroup.hpp"
#include "minkowski/matrix.hpp"
#include "minkowski/polynomial.hpp"
#include "minkowski/seqcheck.hpp"
