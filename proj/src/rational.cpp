#include "esum/rational.hpp"

// Rational is header-only; this TU anchors the target.
namespace esum {}
