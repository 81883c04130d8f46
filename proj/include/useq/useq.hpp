#pragma once

#include "expr/ast.hpp"
#include "expr/eval.hpp"
#include "expr/parser.hpp"
#include "identities.hpp"
#include "rational.hpp"
#include "sequences.hpp"
#include "sweep.hpp"
