#pragma once

#include "partgen/analysis.hpp"
#include "partgen/bench.hpp"
#include "partgen/composition.hpp"
#include "partgen/count.hpp"
#include "partgen/counting.hpp"
#include "partgen/error.hpp"
#include "partgen/generators.hpp"
#include "partgen/instrument.hpp"
#include "partgen/oracle.hpp"
#include "partgen/probe.hpp"
#include "partgen/stream.hpp"
#include "partgen/verify.hpp"
