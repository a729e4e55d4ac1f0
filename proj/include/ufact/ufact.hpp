#ifndef UFACT_UFACT_HPP
#define UFACT_UFACT_HPP

#include "ufact/canonical.hpp"
#include "ufact/config.hpp"
#include "ufact/construct.hpp"
#include "ufact/decomp.hpp"
#include "ufact/dot.hpp"
#include "ufact/embed.hpp"
#include "ufact/enumerate.hpp"
#include "ufact/error.hpp"
#include "ufact/factor.hpp"
#include "ufact/hypergraph.hpp"
#include "ufact/io.hpp"
#include "ufact/join.hpp"
#include "ufact/parallel.hpp"
#include "ufact/property.hpp"
#include "ufact/props.hpp"
#include "ufact/standard_graphs.hpp"
#include "ufact/universe.hpp"

#endif  // UFACT_UFACT_HPP
