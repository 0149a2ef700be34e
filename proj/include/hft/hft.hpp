#pragma once

#include "hft/analysis.hpp"
#include "hft/fft.hpp"
#include "hft/field_core.hpp"
#include "hft/field_io.hpp"
#include "hft/hio_solver.hpp"
#include "hft/image_io.hpp"
#include "hft/ingest.hpp"
#include "hft/noise_model.hpp"
#include "hft/types.hpp"
