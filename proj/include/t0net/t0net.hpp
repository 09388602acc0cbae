// Umbrella header.
#pragma once

#include "t0net/bitmatrix.hpp"
#include "t0net/characterization.hpp"
#include "t0net/cud.hpp"
#include "t0net/digital_net.hpp"
#include "t0net/json_io.hpp"
#include "t0net/text_io.hpp"
