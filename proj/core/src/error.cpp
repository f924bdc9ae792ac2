#include "trendlab/error.hpp"

namespace trendlab {

void throw_input(const std::string& what) { throw InputError(what); }

void throw_numeric(const std::string& what) { throw NumericError(what); }

}  // namespace trendlab
