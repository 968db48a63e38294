#pragma once

#include <string>

#include "sfpow/io.hpp"

inline sfpow::MonomialIdeal ideal(const std::string& text, std::size_t vars) {
  return sfpow::io::parse_ideal_text(text, vars);
}

inline sfpow::Monomial mono(const std::string& text, std::size_t vars) {
  return sfpow::parse_monomial(text, vars);
}
