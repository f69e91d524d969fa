#pragma once

#include "antimagic/error.hpp"
#include "antimagic/forest.hpp"
#include "antimagic/generator.hpp"
#include "antimagic/io.hpp"
#include "antimagic/labeler.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/partition.hpp"
#include "antimagic/rooted.hpp"
#include "antimagic/verify.hpp"
