#pragma once

#include "monideal/asym.hpp"
#include "monideal/cli.hpp"
#include "monideal/core.hpp"
#include "monideal/decomp.hpp"
#include "monideal/error.hpp"
#include "monideal/generator.hpp"
#include "monideal/lp.hpp"
#include "monideal/polar.hpp"
#include "monideal/powers.hpp"
#include "monideal/rational.hpp"
#include "monideal/text.hpp"
#include "monideal/weightgraph.hpp"
