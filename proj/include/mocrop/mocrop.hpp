#pragma once

// Umbrella header for the MoCrop adaptive-cropping library.

#include "mocrop/bench.hpp"
#include "mocrop/denoise.hpp"
#include "mocrop/density.hpp"
#include "mocrop/errors.hpp"
#include "mocrop/eval.hpp"
#include "mocrop/geometry.hpp"
#include "mocrop/image.hpp"
#include "mocrop/pipeline.hpp"
#include "mocrop/rng.hpp"
#include "mocrop/search.hpp"
#include "mocrop/sidecar.hpp"
#include "mocrop/synth.hpp"
#include "mocrop/types.hpp"
