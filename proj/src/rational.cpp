#include "defcol/rational.hpp"

#include <ostream>

namespace defcol {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace defcol
