#pragma once

#include "patdyn/cylinder.hpp"
#include "patdyn/entropy.hpp"
#include "patdyn/forcing.hpp"
#include "patdyn/loops.hpp"
#include "patdyn/markov_graph.hpp"
#include "patdyn/pattern.hpp"
#include "patdyn/plmap.hpp"
#include "patdyn/polynomial.hpp"
#include "patdyn/rational.hpp"
#include "patdyn/sharkovskii.hpp"
