#ifndef ZASYM_ZASYM_HPP
#define ZASYM_ZASYM_HPP

/* Exact combinatorics of z-asymmetric partitions: partitions and their
 * Frobenius coordinates, content sequences, content/hook tabloids with
 * the diagonal-shift bijection, Schur specializations, and machine
 * verifiers for the product and generating-function identities they
 * satisfy. Everything is integer-exact; there is no floating point. */

#include "zasym/bigint.hpp"
#include "zasym/content_sequence.hpp"
#include "zasym/errors.hpp"
#include "zasym/json_io.hpp"
#include "zasym/laurent.hpp"
#include "zasym/multivariate.hpp"
#include "zasym/partition.hpp"
#include "zasym/report.hpp"
#include "zasym/schur.hpp"
#include "zasym/ssyt.hpp"
#include "zasym/tabloid.hpp"
#include "zasym/verify.hpp"

#endif
