#pragma once

// Umbrella header: the whole library except the CLI layer.

#include "alliance/canonical.hpp"
#include "alliance/constructions.hpp"
#include "alliance/corpus.hpp"
#include "alliance/errors.hpp"
#include "alliance/harness.hpp"
#include "alliance/predicates.hpp"
#include "alliance/pruefer.hpp"
#include "alliance/solvers.hpp"
#include "alliance/tree.hpp"
#include "alliance/vertex_set.hpp"
