#pragma once
#include <string>

#include "equivariant.hpp"

// Tiny arithmetic grammar for command-line profiles, version 1:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := unary ('^' number)?
//   unary  := ('+'|'-') unary | primary
//   primary:= number | 'rho' | 'pi' | fn '(' expr ')' | '(' expr ')'
//   fn     := sin cos tan sinh cosh exp log sqrt atan
// Exponents are numeric literals; everything evaluates on jets in rho.

namespace wb {

inline const char* profile_grammar_version = "1";

struct ExprParseError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

// throws ExprParseError on malformed input
Profile parse_profile(const std::string& text);

} // namespace wb
