// SPDX-License-Identifier: Apache-2.0
//
// Convenience header pulling in the whole public API.

#pragma once

#include "ltoeplitz/catalog.hpp"
#include "ltoeplitz/config.hpp"
#include "ltoeplitz/error.hpp"
#include "ltoeplitz/io.hpp"
#include "ltoeplitz/linalg.hpp"
#include "ltoeplitz/operator.hpp"
#include "ltoeplitz/ordered_group.hpp"
#include "ltoeplitz/spectral.hpp"
#include "ltoeplitz/symbol.hpp"
#include "ltoeplitz/verify.hpp"
