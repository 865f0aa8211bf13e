#ifndef KAUFFMAN_CLI_HPP
#define KAUFFMAN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kauffman::cli {

// exit 0: holds / verification passed; 1: fails, witness printed;
// 2: usage or parse error
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kauffman::cli

#endif
