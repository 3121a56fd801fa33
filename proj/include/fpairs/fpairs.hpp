#pragma once

#include <fpairs/algebra/cyclotomic.hpp>
#include <fpairs/algebra/integer.hpp>
#include <fpairs/algebra/mod_ring.hpp>
#include <fpairs/algebra/vector_space.hpp>
#include <fpairs/conjectures/permanent.hpp>
#include <fpairs/conjectures/scan.hpp>
#include <fpairs/dyson.hpp>
#include <fpairs/errors.hpp>
#include <fpairs/nullstellensatz.hpp>
#include <fpairs/pairing_polys.hpp>
#include <fpairs/poly/factored_poly.hpp>
#include <fpairs/poly/multi_poly.hpp>
#include <fpairs/poly/rings.hpp>
#include <fpairs/solvers/counterexamples.hpp>
#include <fpairs/solvers/packing.hpp>
#include <fpairs/solvers/pair_partition.hpp>
#include <fpairs/solvers/vector_partition.hpp>
#include <fpairs/solvers/verify.hpp>
#include <fpairs/sumsets.hpp>
