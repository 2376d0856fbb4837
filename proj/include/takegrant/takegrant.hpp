#pragma once

#include "takegrant/bridge.hpp"
#include "takegrant/error.hpp"
#include "takegrant/format.hpp"
#include "takegrant/graph.hpp"
#include "takegrant/islands.hpp"
#include "takegrant/oracle.hpp"
