#pragma once

#include "twistcode/bitmatrix.hpp"
#include "twistcode/codes.hpp"
#include "twistcode/errors.hpp"
#include "twistcode/graph.hpp"
#include "twistcode/graph_code.hpp"
#include "twistcode/homology.hpp"
#include "twistcode/report.hpp"
