#ifndef TYFAM_TYFAM_HPP
#define TYFAM_TYFAM_HPP

#include <tyfam/certificate.hpp>
#include <tyfam/checkpoint.hpp>
#include <tyfam/combinatorics.hpp>
#include <tyfam/enumeration.hpp>
#include <tyfam/estimation.hpp>
#include <tyfam/graph.hpp>
#include <tyfam/graph6.hpp>
#include <tyfam/moves.hpp>
#include <tyfam/report.hpp>
#include <tyfam/table.hpp>

#endif
