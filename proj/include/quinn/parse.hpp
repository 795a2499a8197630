#pragma once

// Text front end: polynomial expressions, coordinate-ring matrix entries
// (fractions allowed, cleared to a common denominator), curve parameter
// lists, and points.

#include "quinn/normlab.hpp"
#include "quinn/ratring.hpp"

namespace quinn::parse {

// +, -, *, ^, parentheses, implicit multiplication by juxtaposition; one
// variable.  math_error on any syntax problem.
polyf::Poly parse_poly(const std::string& text, const gf::FieldSpec* fs,
                       const std::string& var = "x");

// Same grammar in the variables x and y, reduced by y^2 = f.
coordring::RingElement parse_ring_element(const std::string& text,
                                          const polyf::Poly& f);

// "[[y, -x^2], [x, -y]]".  An entry may be a fraction "(n)/(d)"; the whole
// matrix is then scaled by the product of the distinct denominators, which
// moves it inside the ring without changing the normalizer verdict or the
// class.
normlab::MatrixOverA parse_matrix(const std::string& text,
                                  const polyf::Poly& f);

// Short form "a=-3,b=0" or long form "a1=..,a2=..,a3=..,a4=..,a6=.."
// (integers mod p; missing long-form coefficients default to 0).
curve::WeierstrassCurve parse_curve_spec(const std::string& text,
                                         const gf::FieldSpec* fs);

// Matrix over the genus-0 ring, entries polynomial in t; an entry may be a
// fraction whose denominator is a power of pi.
ratring::RatMatrix parse_rat_matrix(const std::string& text,
                                    const ratring::RatRingSpec& spec);

// "(3,2)" or "inf"; membership on the curve is validated.
curve::CurvePoint parse_point(const std::string& text,
                              const curve::WeierstrassCurve& c);

} // namespace quinn::parse
