/*
   Copyright 2026 The ffdyn Authors

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

#ifndef FFDYN_ERRORS_HPP
#define FFDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffdyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the operation's domain (non-prime modulus,
/// mismatched fields, n equal to the characteristic, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The element is not invertible modulo the given polynomial.
class NotAUnitError : public DomainError {
public:
    using DomainError::DomainError;
};

/// All operator coefficients d_1..d_m were zero.
class DegenerateOperatorError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured cap (state count, operator count, factoring effort) was
/// exceeded. The requested answer is withheld, never approximated.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace ffdyn

#endif  // FFDYN_ERRORS_HPP
