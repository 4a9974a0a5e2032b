#pragma once

#include "moncoh/groupoid.hpp"
#include "moncoh/hmod.hpp"
#include "moncoh/monoid.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace moncoh {

// Malformed input; field() is a JSON pointer (or the shorthand itself) locating
// the offending part.
class DescriptorError : public std::invalid_argument {
public:
    DescriptorError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Monoids: `cyclic:m,q`, `infinite-cyclic`, `@file.json` or inline JSON
//   {"kind":"table","size":n,"identity":e,"table":[[...]]}
//   {"kind":"cyclic","index":m,"period":q}
//   {"kind":"infinite-cyclic"}
std::shared_ptr<const Monoid> parse_monoid(const std::string& text);

// Coefficients: `Z`, `Z/n`, `Z^r`, sums like `Z/2+Z/4+Z`, `@file.json` or inline JSON
//   {"kind":"constant","group":{"free_rank":r,"torsion":[...]}}
//   {"kind":"tabular","groups":{"x":{...}},"actions":{"x,y":[[...]]}}
// where "x,y" is y_*: A(x) -> A(xy), given by rows.
HModule parse_coefficients(const std::string& text, std::shared_ptr<const Monoid> monoid);
FGAbelianGroup parse_group(const std::string& text);

// {"g":{"x,y,z":[...]},"mu":{"x,y":[...]}}, or `@file.json`.
FiveCochain parse_cocycle(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace moncoh
