#ifndef MAG_CLI_HPP
#define MAG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mag {

// Exit codes: 0 success / true answer, 1 false answer for predicates,
// 2 usage or parse error, 3 internal invariant violation.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mag

#endif
