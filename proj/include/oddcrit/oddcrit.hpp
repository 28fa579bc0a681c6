#ifndef ODDCRIT_ODDCRIT_HPP
#define ODDCRIT_ODDCRIT_HPP

#include "oddcrit/factors.hpp"
#include "oddcrit/graph.hpp"
#include "oddcrit/params.hpp"
#include "oddcrit/quotient.hpp"
#include "oddcrit/report_io.hpp"
#include "oddcrit/sampling.hpp"
#include "oddcrit/spectrum.hpp"
#include "oddcrit/theorem_lab.hpp"

#endif  // ODDCRIT_ODDCRIT_HPP
