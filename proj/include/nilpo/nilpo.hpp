#pragma once

#include "nilpo/cohomology.hpp"
#include "nilpo/constructors.hpp"
#include "nilpo/errors.hpp"
#include "nilpo/exactlin.hpp"
#include "nilpo/exterior.hpp"
#include "nilpo/io.hpp"
#include "nilpo/kform.hpp"
#include "nilpo/liealg.hpp"
#include "nilpo/rational.hpp"
#include "nilpo/report.hpp"
#include "nilpo/rootsys.hpp"
#include "nilpo/symplectic.hpp"
