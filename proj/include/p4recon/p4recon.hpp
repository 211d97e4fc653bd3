#pragma once

#include "p4recon/canonical.hpp"
#include "p4recon/classes.hpp"
#include "p4recon/deck.hpp"
#include "p4recon/enumerate.hpp"
#include "p4recon/graph.hpp"
#include "p4recon/oracles.hpp"
#include "p4recon/pstructure.hpp"
