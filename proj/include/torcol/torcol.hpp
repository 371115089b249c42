#pragma once

#include "torcol/coloring.hpp"
#include "torcol/cycles.hpp"
#include "torcol/discharging.hpp"
#include "torcol/embedding.hpp"
#include "torcol/errors.hpp"
#include "torcol/formats.hpp"
#include "torcol/generators.hpp"
#include "torcol/graph.hpp"
#include "torcol/graph6.hpp"
#include "torcol/oracle.hpp"
#include "torcol/rational.hpp"
#include "torcol/reduction.hpp"
#include "torcol/rules_io.hpp"
#include "torcol/structures.hpp"
