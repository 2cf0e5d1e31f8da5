#ifndef YINV_CLI_HPP
#define YINV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace yinv::cli {

// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 validation error, 4 domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace yinv::cli

#endif
