/*
 * Copyright 2026 The nsi Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace nsi {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Profiles of different dimension were combined, or a color is out of range. */
class DimensionError : public Error {
public:
    using Error::Error;
};

/** Arithmetic on profiles that has no defined result (e.g. +inf + -inf). */
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/** Malformed PGSolver input or an invalid game. */
class FormatError : public Error {
public:
    using Error::Error;
};

/** A strategy admits a cycle that player 1 wins, so its valuation is undefined. */
class ReasonablenessError : public Error {
public:
    using Error::Error;
};

/** An internal consistency check failed. Indicates a bug, not bad input. */
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/** A brute-force enumeration would exceed its configured cap. */
class LimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace nsi
