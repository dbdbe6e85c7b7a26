/*
   Copyright 2026 The footprint-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOOTPRINT_ERRORS_HPP
#define FOOTPRINT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace footprint {

// Field construction and element errors.
struct NotPrimePower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};
struct BadEncoding : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Parameter-range errors shared by the monomial engine and the formulas.
struct BadLevel : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct CountOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct NotInHypercube : std::domain_error {
    using std::domain_error::domain_error;
};
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DependentBasis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WitnessInvalid : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised before an exhaustive enumeration starts when its size exceeds the budget.
/// `required` is the number of (candidate x evaluation) pairs the run would need,
/// as a decimal string since it can be astronomically large.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::string required, std::string candidates, std::uint64_t budget)
        : std::runtime_error("enumeration needs " + required + " evaluations (" + candidates +
                             " candidates), budget is " + std::to_string(budget)),
          required_(std::move(required)),
          candidates_(std::move(candidates)),
          budget_(budget) {}

    const std::string& required() const noexcept { return required_; }
    const std::string& candidates() const noexcept { return candidates_; }
    std::uint64_t budget() const noexcept { return budget_; }

   private:
    std::string required_;
    std::string candidates_;
    std::uint64_t budget_;
};

}  // namespace footprint

#endif
