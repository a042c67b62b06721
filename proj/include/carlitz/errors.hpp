/*
   Copyright 2026 The carlitz-shtuka Authors

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

#ifndef CARLITZ_ERRORS_HPP
#define CARLITZ_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace carlitz {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CARLITZ_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    };

CARLITZ_DEFINE_ERROR(DivisionByZero)
CARLITZ_DEFINE_ERROR(Inconsistent)
CARLITZ_DEFINE_ERROR(PrecisionExhausted)
CARLITZ_DEFINE_ERROR(NoRoot)
CARLITZ_DEFINE_ERROR(RamifiedRoot)
CARLITZ_DEFINE_ERROR(ParseError)
CARLITZ_DEFINE_ERROR(WindowTooSmall)
CARLITZ_DEFINE_ERROR(WildOrSingular)
CARLITZ_DEFINE_ERROR(OutOfDomain)
CARLITZ_DEFINE_ERROR(InvalidPackage)
CARLITZ_DEFINE_ERROR(RealizationFailed)
CARLITZ_DEFINE_ERROR(IdentityFailure)
CARLITZ_DEFINE_ERROR(MismatchAcrossTwists)

#undef CARLITZ_DEFINE_ERROR

/// A curve package failed one of its structural checks; `name` identifies it.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string name, const std::string& detail)
        : Error("InvariantViolation(" + name + "): " + detail), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Raised by solve_exp when peeling stalls. Not a proof of non-membership.
class NoSolutionFound : public Error {
public:
    NoSolutionFound(int depth, const std::string& detail)
        : Error("NoSolutionFound(depth=" + std::to_string(depth) + "): " + detail), depth_(depth) {}
    int depth() const noexcept { return depth_; }

private:
    int depth_;
};

/// decompose() was handed an element whose H^1 class is nonzero.
class NonzeroClass : public Error {
public:
    explicit NonzeroClass(std::vector<int> coords)
        : Error("NonzeroClass: element has a nonzero cohomology class"), coords_(std::move(coords)) {}
    /// Coordinates of the obstruction in the echelon basis of H^1 (field codes).
    const std::vector<int>& coords() const noexcept { return coords_; }

private:
    std::vector<int> coords_;
};

/// A windowed exactness check failed; `witness` is a k-coordinate vector.
class ExactnessFailure : public Error {
public:
    ExactnessFailure(const std::string& what, std::vector<int> witness)
        : Error("ExactnessFailure: " + what), witness_(std::move(witness)) {}
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::vector<int> witness_;
};

}  // namespace carlitz

#endif  // CARLITZ_ERRORS_HPP
