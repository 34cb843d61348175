#ifndef TAILSUM_CLI_HPP
#define TAILSUM_CLI_HPP

namespace tailsum::cli {

// Exit codes: 0 success, 1 failed verification check, 2 usage/parse errors.
int run(int argc, const char* const* argv);

}

#endif
