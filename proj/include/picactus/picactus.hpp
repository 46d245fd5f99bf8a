#pragma once

#include "picactus/canonical.hpp"
#include "picactus/enumerate.hpp"
#include "picactus/errors.hpp"
#include "picactus/extremal.hpp"
#include "picactus/graph.hpp"
#include "picactus/indices.hpp"
#include "picactus/io.hpp"
#include "picactus/structure.hpp"
#include "picactus/verify.hpp"
