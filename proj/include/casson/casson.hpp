#pragma once

// Umbrella header: exact Casson and Rohlin invariants of homology 3-spheres
// presented by two-knot Kirby diagrams and +-1-surgeries on twisted
// doubles, with the supporting exact linear algebra, knot polynomial, and
// diagram machinery.

#include "casson/errors.hpp"
#include "casson/integer.hpp"
#include "casson/intform.hpp"
#include "casson/kirby.hpp"
#include "casson/knots.hpp"
#include "casson/laurent.hpp"
#include "casson/matrix.hpp"
#include "casson/pdcode.hpp"
#include "casson/surgery_table.hpp"
