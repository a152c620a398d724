#pragma once

#include "amhs/composition.hpp"
#include "amhs/rational.hpp"
#include "amhs/residue.hpp"

#include <cstdint>
#include <vector>

namespace amhs {

struct ReductionTerm {
    Rational coefficient;
    Composition composition;
};

// sum of coefficient * H(composition; p-1), meant mod p
struct ReductionTermSum {
    std::vector<ReductionTerm> terms;
    std::uint64_t p = 0;
};

// right-hand sides of the depth-reduction congruences for H(a, tail) and H(-a, tail)
ReductionTermSum positive_head_terms(unsigned a, const Composition& tail, std::uint64_t p);
ReductionTermSum negative_head_terms(unsigned a, const Composition& tail, std::uint64_t p);

// All terms share the tail after the first part, so one suffix table serves them all.
Residue evaluate(const ReductionTermSum& sum);
// every term through the evaluator; reference path
Residue evaluate_direct(const ReductionTermSum& sum);

Residue reduce_positive_head(unsigned a, const Composition& tail, std::uint64_t p);
Residue reduce_negative_head(unsigned a, const Composition& tail, std::uint64_t p);

}  // namespace amhs
