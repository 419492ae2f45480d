#include "rwg/error.hpp"

namespace rwg {

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rwg
