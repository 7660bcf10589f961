#pragma once

#include "mero/error.hpp"
#include "mero/gaussrat.hpp"
#include "mero/poly.hpp"
#include "mero/ratfun.hpp"
#include "mero/roots.hpp"
#include "mero/matrix.hpp"
#include "mero/matfun.hpp"
#include "mero/smith.hpp"
#include "mero/structure.hpp"
#include "mero/logres.hpp"
#include "mero/odesys.hpp"
#include "mero/realization.hpp"
#include "mero/parser.hpp"
#include "mero/io.hpp"
#include "mero/report.hpp"
