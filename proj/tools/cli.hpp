#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wbou/levy_driver.hpp"

namespace wbou::cli {

enum ExitCode : int { kOk = 0, kIoFailure = 1, kValidationFailure = 2 };

/// Parses "family:key=value,..." with family one of
///   brownian:gamma=,sigma2=          (alias bm)
///   gamma:a=,b=                      (alias gamma_subordinator)
///   cpoisson:eta=,jump=normal,m=,s2= (alias compound_poisson)
///   cpoisson:eta=,jump=exp,rate=
///   cpoisson:eta=,jump=point,c=
///   drift:gamma=                     (alias deterministic_drift)
/// Throws InvalidDriver.
Driver parse_driver(std::string_view text);

/// `<stem>_<index><ext>` next to `path`.
std::string indexed_path(const std::string& path, std::size_t index);

/// Entry point of the command-line tool; never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wbou::cli
