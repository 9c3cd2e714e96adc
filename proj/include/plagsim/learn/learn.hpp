#pragma once

#include "plagsim/learn/classifiers.hpp"
#include "plagsim/learn/evaluation.hpp"
#include "plagsim/learn/metrics.hpp"
#include "plagsim/learn/model.hpp"
#include "plagsim/learn/report.hpp"
