#ifndef DIMSPEC_DIMSPEC_HPP
#define DIMSPEC_DIMSPEC_HPP

#include "dimspec/error.hpp"
#include "dimspec/feasibility.hpp"
#include "dimspec/model.hpp"
#include "dimspec/oracle.hpp"
#include "dimspec/potential.hpp"
#include "dimspec/reference_table.hpp"
#include "dimspec/report.hpp"
#include "dimspec/signed_log.hpp"
#include "dimspec/spectrum.hpp"

#endif  // DIMSPEC_DIMSPEC_HPP
