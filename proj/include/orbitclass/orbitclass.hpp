#ifndef ORBITCLASS_ORBITCLASS_HPP
#define ORBITCLASS_ORBITCLASS_HPP

#include "orbitclass/chevalley.hpp"
#include "orbitclass/classifier.hpp"
#include "orbitclass/error.hpp"
#include "orbitclass/intlinalg.hpp"
#include "orbitclass/root_datum.hpp"
#include "orbitclass/root_system.hpp"
#include "orbitclass/verifier.hpp"

#endif  // ORBITCLASS_ORBITCLASS_HPP
