#pragma once

#include "zastava/error.hpp"
#include "zastava/scalar.hpp"
#include "zastava/unipoly.hpp"
#include "zastava/series.hpp"
#include "zastava/multipoly.hpp"
#include "zastava/multirat.hpp"
#include "zastava/matrix.hpp"
#include "zastava/structured.hpp"
#include "zastava/root_data.hpp"
#include "zastava/point.hpp"
#include "zastava/sampling.hpp"
#include "zastava/sl2_minors.hpp"
#include "zastava/report.hpp"
#include "zastava/poisson.hpp"
#include "zastava/cluster.hpp"
#include "zastava/superpotential.hpp"
#include "zastava/bench.hpp"
#include "zastava/json_io.hpp"
#include "zastava/verify.hpp"
