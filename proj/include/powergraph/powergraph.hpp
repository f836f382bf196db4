#pragma once

// Umbrella header.

#include "powergraph/catalog.hpp"
#include "powergraph/group.hpp"
#include "powergraph/numth.hpp"
#include "powergraph/pgraph.hpp"
#include "powergraph/products.hpp"
#include "powergraph/report.hpp"
#include "powergraph/verify.hpp"
