#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "garside/braid.hpp"
#include "garside/element.hpp"

namespace garside {

/// Braid word syntax, whitespace or '.' separated:
///   s3  s3^-2      Artin generator sigma_3 and its powers
///   a(4,2)^-1      band generator a_{4,2}
///   D  D^k         the Garside element (Delta, or delta for BKL)
///   [2,0,1]        a simple element literal in the structure's encoding
///   1  e           the identity
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Element parse_word(const BraidStructure& structure, std::string_view text);

/// Smallest strand count the word mentions; at least 2.
int infer_strands(std::string_view text);

/// "D^p . w_1 . ... . w_r" with each factor as a canonical word; "1" for
/// the identity. Parses back to the same element.
std::string format_element(const BraidStructure& structure, const Element& x);

/// {"p": p, "factors": [literal, ...]}.
nlohmann::json element_to_json(const BraidStructure& structure, const Element& x);
Element element_from_json(const BraidStructure& structure, const nlohmann::json& j);

}  // namespace garside
