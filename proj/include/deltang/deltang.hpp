#pragma once

#include "deltang/bounds.hpp"
#include "deltang/chromatic.hpp"
#include "deltang/connectivity.hpp"
#include "deltang/delta.hpp"
#include "deltang/enumeration.hpp"
#include "deltang/error.hpp"
#include "deltang/extremal.hpp"
#include "deltang/flow.hpp"
#include "deltang/graph.hpp"
#include "deltang/graph_io.hpp"
#include "deltang/report_io.hpp"
#include "deltang/sweep.hpp"
#include "deltang/sweep_io.hpp"
