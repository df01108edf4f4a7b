#pragma once

#include "samplecheck/chain.hpp"
#include "samplecheck/error.hpp"
#include "samplecheck/formula.hpp"
#include "samplecheck/kernel.hpp"
#include "samplecheck/rng.hpp"
#include "samplecheck/samplers.hpp"
#include "samplecheck/tester.hpp"
#include "samplecheck/transform.hpp"
#include "samplecheck/weights.hpp"
