#pragma once

#include "twotree/degseq.hpp"
#include "twotree/error.hpp"
#include "twotree/graph.hpp"
#include "twotree/ktree.hpp"
#include "twotree/oracle.hpp"
#include "twotree/recognizer.hpp"
#include "twotree/tree_realizer.hpp"
#include "twotree/two_tree_realizer.hpp"
