// Umbrella header: the full product-code construction and verification kit.
#pragma once

#include "hgp/alist.hpp"
#include "hgp/constructions.hpp"
#include "hgp/css.hpp"
#include "hgp/gf2.hpp"
#include "hgp/hypergraph.hpp"
#include "hgp/report.hpp"
#include "hgp/version.hpp"
