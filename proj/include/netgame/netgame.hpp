#ifndef NETGAME_NETGAME_HPP
#define NETGAME_NETGAME_HPP

// Umbrella header: solvers and experiment tooling for linear-quadratic
// network games with concave peer interaction.

#include "netgame/errors.hpp"
#include "netgame/experiments.hpp"
#include "netgame/game.hpp"
#include "netgame/graphs.hpp"
#include "netgame/interaction.hpp"
#include "netgame/output.hpp"
#include "netgame/pricing.hpp"
#include "netgame/rng.hpp"
#include "netgame/serialize.hpp"
#include "netgame/spectral.hpp"

#endif  // NETGAME_NETGAME_HPP
