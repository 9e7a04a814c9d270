#ifndef CONESPEC_CONESPEC_HPP
#define CONESPEC_CONESPEC_HPP

#include "conespec/cone.hpp"
#include "conespec/curve.hpp"
#include "conespec/emit.hpp"
#include "conespec/error.hpp"
#include "conespec/expr.hpp"
#include "conespec/fraction.hpp"
#include "conespec/local.hpp"
#include "conespec/native_format.hpp"
#include "conespec/oracle.hpp"
#include "conespec/report.hpp"
#include "conespec/scan.hpp"
#include "conespec/singular_format.hpp"
#include "conespec/spectrum.hpp"
#include "conespec/verify.hpp"

#endif  // CONESPEC_CONESPEC_HPP
