#pragma once

#include "ansig/builders.hpp"
#include "ansig/classify.hpp"
#include "ansig/constructions.hpp"
#include "ansig/error.hpp"
#include "ansig/group.hpp"
#include "ansig/oracle.hpp"
#include "ansig/permutation.hpp"
#include "ansig/rng.hpp"
#include "ansig/serialize.hpp"
#include "ansig/signature.hpp"
